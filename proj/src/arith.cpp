#include "ihara/arith.hpp"

#include <algorithm>
#include <numeric>

namespace ihara {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 0) return false;
    if (n >= Int(1) << 64) throw std::invalid_argument("is_prime: input exceeds 64-bit range");
    return is_prime_u64(static_cast<u64>(n));
}

int kronecker(const Int& a_in, const Int& n_in) {
    if (n_in == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    Int a = a_in, n = n_in;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // factor out twos of n: (a|2) = 0 if a even, +1 if a = +-1 mod 8, -1 otherwise
    while ((n & 1) == 0) {
        n >>= 1;
        if ((a & 1) == 0) return 0;
        Int r = floor_mod(a, 8);
        if (r == 3 || r == 5) sign = -sign;
    }
    // Jacobi loop for odd n >= 1
    a = floor_mod(a, n);
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) sign = -sign;
        a = a % n;
    }
    if (n != 1) return 0;
    return sign;
}

prime_factorization factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    prime_factorization out;
    out.value = n;
    Int m = n;
    auto push = [&](const Int& p, unsigned e) { out.factors.push_back({p, e}); };
    const Int small_bound = Int(1) << 20;
    for (Int d = 2; d * d <= m && d <= small_bound; d += (d == 2 ? 1 : 2)) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) { m /= d; ++e; }
            push(d, e);
        }
    }
    if (m > 1) {
        // any remaining cofactor has no factor <= 2^20, so below 2^40 it is prime
        if (m < (Int(1) << 40) || (m < (Int(1) << 64) && is_prime(m))) {
            push(m, 1);
        } else {
            throw std::invalid_argument("factorize: composite cofactor too large");
        }
    }
    return out;
}

int moebius(const Int& n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    auto f = factorize(n);
    for (const auto& pe : f.factors)
        if (pe.e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

Int gcd_all(const std::vector<Int>& xs) {
    if (xs.empty())
        throw std::invalid_argument("gcd_all: empty list (no finite values observed)");
    Int g = 0;
    for (const Int& x : xs) g = boost::multiprecision::gcd(g, x);
    return g;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

std::string decimal_string(const Rat& r, unsigned digits) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);  // always positive
    bool neg = num < 0;
    Int n = neg ? Int(-num) : num;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Int scaled = (n * scale * 2 + den) / (2 * den);
    Int ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string s = ip.str();
    if (digits > 0) s += "." + frac;
    if (neg && (ip != 0 || fp != 0)) s.insert(s.begin(), '-');
    return s;
}

}  // namespace ihara
