#pragma once

// Dense square matrices of exact integers, plus a fraction-free (Bareiss)
// determinant. Used for the Hashimoto operator, its powers, and the exact
// evaluation of zeta determinants at integer points.

#include "ihara/arith.hpp"

#include <cstddef>
#include <vector>

namespace ihara {

class int_matrix {
  public:
    int_matrix() = default;
    explicit int_matrix(std::size_t n) : n_(n), a_(n * n, Int(0)) {}

    static int_matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    int_matrix operator*(const int_matrix& o) const;
    Int trace() const;
    bool operator==(const int_matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free Bareiss elimination (all intermediate
// divisions are exact). Takes a copy; the input is not modified.
Int bareiss_determinant(int_matrix m);

}  // namespace ihara
