#include "ihara/polynomial.hpp"

namespace ihara {

void int_polynomial::trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
}

int_polynomial int_polynomial::monomial(unsigned k, Int coeff) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = std::move(coeff);
    return int_polynomial(std::move(c));
}

Int int_polynomial::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

int_polynomial int_polynomial::operator+(const int_polynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::operator-(const int_polynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::operator*(const int_polynomial& o) const {
    if (is_zero() || o.is_zero()) return int_polynomial();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::pow(unsigned e) const {
    int_polynomial r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string int_polynomial::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    s += "]";
    return s;
}

int_polynomial interpolate_integer_polynomial(const std::vector<Int>& xs,
                                              const std::vector<Int>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolate: point count mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences over exact rationals
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    // expand Newton form: p(x) = sum dd[i] * prod_{j<i} (x - xs[j])
    std::vector<Rat> coeff(n, Rat(0));
    std::vector<Rat> basis(n, Rat(0));  // current product polynomial
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= basis_deg; ++k) coeff[k] += dd[i] * basis[k];
        if (i + 1 < n) {
            // basis *= (x - xs[i])
            for (std::size_t k = basis_deg + 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rat(xs[i]) * basis[k];
            basis[0] = -Rat(xs[i]) * basis[0];
            ++basis_deg;
        }
    }
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (boost::multiprecision::denominator(coeff[i]) != 1)
            throw std::logic_error("interpolate: non-integer coefficient");
        out[i] = boost::multiprecision::numerator(coeff[i]);
    }
    return int_polynomial(std::move(out));
}

}  // namespace ihara
