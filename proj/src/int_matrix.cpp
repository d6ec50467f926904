#include "ihara/int_matrix.hpp"

namespace ihara {

int_matrix int_matrix::identity(std::size_t n) {
    int_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int_matrix int_matrix::operator*(const int_matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("int_matrix: size mismatch");
    int_matrix r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                const Int& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    }
    return r;
}

Int int_matrix::trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Int bareiss_determinant(int_matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int det = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

}  // namespace ihara
