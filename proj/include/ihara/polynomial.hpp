#pragma once

// Exact integer polynomials, ascending-degree coefficients. No floating
// point anywhere in construction or arithmetic.

#include "ihara/arith.hpp"

#include <string>
#include <vector>

namespace ihara {

class int_polynomial {
  public:
    int_polynomial() : c_{0} {}
    explicit int_polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static int_polynomial constant(Int v) { return int_polynomial({std::move(v)}); }
    // u^k
    static int_polynomial monomial(unsigned k, Int coeff = 1);

    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // deg 0 for constants, including 0
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    const Int& operator[](std::size_t i) const { return c_[i]; }

    Int eval(const Int& x) const;

    int_polynomial operator+(const int_polynomial& o) const;
    int_polynomial operator-(const int_polynomial& o) const;
    int_polynomial operator*(const int_polynomial& o) const;
    int_polynomial pow(unsigned e) const;
    bool operator==(const int_polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const int_polynomial& o) const { return c_ != o.c_; }

    // "[1,0,0,-2,0,0,1]"
    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> c_;
};

// Recovers the unique polynomial of degree < xs.size() through the points
// (xs[i], ys[i]) by exact Newton divided differences; throws std::logic_error
// if any resulting coefficient is not an integer.
int_polynomial interpolate_integer_polynomial(const std::vector<Int>& xs,
                                              const std::vector<Int>& ys);

}  // namespace ihara
