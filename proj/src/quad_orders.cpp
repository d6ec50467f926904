#include "ihara/quad_orders.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <tuple>

namespace ihara::quad {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;
using boost::multiprecision::sqrt;

Int pow_int(const Int& b, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// extended gcd: returns (g, u, v) with u*a + v*b = g >= 0
std::tuple<Int, Int, Int> extgcd(Int a, Int b) {
    Int u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        Int q = a / b;
        a -= q * b; std::swap(a, b);
        u0 -= q * u1; std::swap(u0, u1);
        v0 -= q * v1; std::swap(v0, v1);
    }
    if (a < 0) { a = -a; u0 = -u0; v0 = -v0; }
    return {a, u0, v0};
}

Int inv_mod(const Int& a, const Int& m) {
    auto [g, u, v] = extgcd(a, m);
    if (g != 1) throw std::logic_error("inv_mod: not invertible");
    return floor_mod(u, m);
}

void require_prime(const Int& p, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": not a prime");
}

// Tonelli-Shanks: square root of a mod odd prime p, if one exists.
std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
    Int a = floor_mod(a_in, p);
    if (a == 0) return Int(0);
    if (kronecker(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    // write p-1 = q * 2^s
    Int q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// All square roots of a mod p^e (p odd prime, e >= 1). Root sets stay tiny
// here because v_p(D) <= 1 for conductors coprime to p.
std::vector<Int> sqrt_mod_prime_power(const Int& a_in, const Int& p, unsigned e) {
    const Int pe = pow_int(p, e);
    Int a = floor_mod(a_in, pe);
    if (a == 0) {
        // x = 0 mod p^ceil(e/2)
        const Int step = pow_int(p, (e + 1) / 2);
        std::vector<Int> out;
        for (Int x = 0; x < pe; x += step) out.push_back(x);
        return out;
    }
    unsigned v = 0;
    Int u = a;
    while (u % p == 0) { u /= p; ++v; }
    if (v % 2 == 1) return {};
    if (v > 0) {
        std::vector<Int> sub = sqrt_mod_prime_power(u, p, e - v);
        const Int ph = pow_int(p, v / 2);
        const Int mod_sub = pow_int(p, e - v / 2);
        std::vector<Int> out;
        for (const Int& y : sub) {
            // x = p^{v/2} y, well defined mod p^{e - v/2}; expand to mod p^e
            for (Int t = ph * y; t < pe; t += mod_sub) out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    auto r0 = sqrt_mod_prime(u, p);
    if (!r0) return {};
    // Hensel lift r with r^2 = u mod p^k, one power at a time
    Int r = *r0, pk = p;
    for (unsigned k = 1; k < e; ++k) {
        Int delta = floor_mod((u - r * r) / pk, p);
        Int t = delta * inv_mod(floor_mod(2 * r, p), p) % p;
        r += t * pk;
        pk *= p;
    }
    r = floor_mod(r, pe);
    Int r2 = floor_mod(-r, pe);
    if (r == r2) return {r};
    return r < r2 ? std::vector<Int>{r, r2} : std::vector<Int>{r2, r};
}

// All square roots of a mod 2^k.
std::vector<Int> sqrt_mod_2k(const Int& a_in, unsigned k) {
    const Int mod = Int(1) << k;
    Int a = floor_mod(a_in, mod);
    if (k == 1) return {a};
    if (k == 2) {
        if (a == 0) return {0, 2};
        if (a == 1) return {1, 3};
        return {};
    }
    if (a == 0) {
        const Int step = Int(1) << ((k + 1) / 2);
        std::vector<Int> out;
        for (Int x = 0; x < mod; x += step) out.push_back(x);
        return out;
    }
    if (a % 2 == 1) {
        if (a % 8 != 1) return {};
        // lift from mod 8 upward: roots of x^2 = a mod 2^j come in 4s
        Int r = 1;  // r^2 = a mod 8
        for (unsigned j = 3; j < k; ++j) {
            // adjust so r^2 = a mod 2^{j+1}
            if (floor_mod(r * r - a, Int(1) << (j + 1)) != 0) r += Int(1) << (j - 1);
        }
        std::vector<Int> out{floor_mod(r, mod), floor_mod(-r, mod),
                             floor_mod(r + (mod >> 1), mod), floor_mod(-r + (mod >> 1), mod)};
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    if (a % 4 != 0) return {};
    std::vector<Int> sub = sqrt_mod_2k(a / 4, k - 2);
    std::vector<Int> out;
    for (const Int& y : sub) {
        Int x = floor_mod(2 * y, mod);  // defined mod 2^{k-1}
        out.push_back(x);
        out.push_back(floor_mod(x + (mod >> 1), mod));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // keep only genuine roots (the recursion can overshoot when a/4 has
    // deep 2-divisibility)
    std::vector<Int> ok;
    for (const Int& x : out)
        if (floor_mod(x * x - a, mod) == 0) ok.push_back(x);
    return ok;
}

// All b mod 4M with b^2 = D (mod 4M), M = p^e.
std::vector<Int> disc_roots_mod_4M(const Int& D, const Int& p, unsigned e) {
    if (p == 2) return sqrt_mod_2k(D, e + 2);
    const Int pe = pow_int(p, e);
    const Int mod = 4 * pe;
    std::vector<Int> r4 = (floor_mod(D, 4) == 0) ? std::vector<Int>{0, 2} : std::vector<Int>{1, 3};
    std::vector<Int> rp = sqrt_mod_prime_power(D, p, e);
    // CRT mod 4 and mod p^e
    const Int inv4 = inv_mod(4, pe);
    std::vector<Int> out;
    for (const Int& x4 : r4) {
        for (const Int& xp : rp) {
            // x = x4 + 4*t, t = (xp - x4)/4 mod p^e
            Int t = floor_mod((xp - x4) * inv4, pe);
            out.push_back(floor_mod(x4 + 4 * t, mod));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Does the principal class of discriminant D represent M = p^e primitively?
bool principal_represents_prime_power(const Int& D, const quad_form& principal,
                                      const Int& p, unsigned e) {
    const Int M = pow_int(p, e);
    std::vector<Int> roots = disc_roots_mod_4M(D, p, e);
    const Int twoM = 2 * M;
    std::vector<Int> seen;
    for (const Int& b4 : roots) {
        Int b = floor_mod(b4, twoM);  // the form (M, b, .) depends on b mod 2M
        if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
        seen.push_back(b);
        Int c = (b * b - D) / (4 * M);
        if (reduced({M, b, c}) == principal) return true;
    }
    return false;
}

// Reduced-form scan; int64 fast path for the magnitudes the verifier visits.
void scan_forms_i64(long long D, std::vector<quad_form>& out) {
    const long long absD = -D;
    long long amax = 1;
    while ((amax + 1) * (amax + 1) * 3 <= absD) ++amax;
    const long long parity = ((D % 2) + 2) % 2;
    for (long long a = 1; a <= amax; ++a) {
        const long long a4 = 4 * a;
        for (long long b = (a % 2 == parity) ? a : a - 1; b >= 0; b -= 2) {
            long long num = b * b + absD;
            if (num % a4 != 0) continue;
            long long c = num / a4;
            if (c < a) continue;
            if (std::gcd(a, std::gcd(b, c)) != 1) continue;
            out.push_back({Int(a), Int(b), Int(c)});
            if (b > 0 && b < a && a < c) out.push_back({Int(a), Int(-b), Int(c)});
        }
    }
}

void scan_forms_big(const Int& D, std::vector<quad_form>& out) {
    const Int absD = -D;
    const Int third = absD / 3;
    Int amax = sqrt(third);
    while ((amax + 1) * (amax + 1) * 3 <= absD) ++amax;
    while (amax * amax * 3 > absD) --amax;
    const Int parity = floor_mod(D, 2);
    for (Int a = 1; a <= amax; ++a) {
        const Int a4 = 4 * a;
        for (Int b = (a % 2 == parity) ? a : a - 1; b >= 0; b -= 2) {
            Int num = b * b + absD;
            if (num % a4 != 0) continue;
            Int c = num / a4;
            if (c < a) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
            if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
        }
    }
}

// Order of [g] under composition; `bound` caps the walk.
Int order_of_class(const quad_form& g, const quad_form& principal, const Int& bound) {
    quad_form acc = reduced(g);
    Int ord = 1;
    while (!(acc == principal)) {
        acc = compose(acc, g);
        ++ord;
        if (ord > bound) throw std::logic_error("order_of_class: walk exceeded class number");
    }
    return ord;
}

quad_form prime_form(const discriminant& d, const Int& p) {
    std::vector<Int> roots = disc_roots_mod_4M(d.D, p, 1);
    if (roots.empty()) throw std::logic_error("prime_form: no square root of D mod 4p");
    Int b = roots.front();
    return {p, b, (b * b - d.D) / (4 * p)};
}

Int class_order_of_prime_with_h(const discriminant& d, const Int& p, const Int& h) {
    return order_of_class(prime_form(d, p), principal_form(d.D), h);
}

}  // namespace

bool is_valid_discriminant(const Int& D) {
    return D < 0 && floor_mod(D, 4) <= 1;
}

discriminant decompose_discriminant(const Int& D) {
    if (!is_valid_discriminant(D))
        throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4");
    prime_factorization fac = factorize(-D);
    Int f = 1;
    for (const auto& pe : fac.factors)
        for (unsigned i = 0; i + 1 < pe.e; i += 2) f *= pe.p;
    Int d0 = D / (f * f);
    if (floor_mod(d0, 4) != 1) {
        // squarefree d0 = 2,3 mod 4: fundamental discriminant is 4*d0
        f /= 2;
        d0 = D / (f * f);
    }
    return {D, d0, f};
}

bool operator<(const quad_form& x, const quad_form& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
}

Int form_discriminant(const quad_form& g) { return g.b * g.b - 4 * g.a * g.c; }

quad_form principal_form(const Int& D) {
    if (!is_valid_discriminant(D)) throw std::invalid_argument("principal_form: invalid discriminant");
    if (floor_mod(D, 4) == 0) return {1, 0, -D / 4};
    return {1, 1, (1 - D) / 4};
}

quad_form reduced(quad_form g) {
    if (g.a <= 0) throw std::invalid_argument("reduced: form must be positive definite");
    const Int D = form_discriminant(g);
    auto normalize = [&]() {
        Int m = floor_div(g.a - g.b, 2 * g.a);
        g.b += 2 * g.a * m;
        g.c = (g.b * g.b - D) / (4 * g.a);
    };
    normalize();
    while (g.a > g.c) {
        std::swap(g.a, g.c);
        g.b = -g.b;
        normalize();
    }
    if (g.a == g.c && g.b < 0) g.b = -g.b;
    return g;
}

bool is_reduced(const quad_form& g) {
    Int ab = g.b < 0 ? Int(-g.b) : g.b;
    if (!(ab <= g.a && g.a <= g.c)) return false;
    if ((ab == g.a || g.a == g.c) && g.b < 0) return false;
    return true;
}

form_class_group reduced_forms(const discriminant& d) {
    std::vector<quad_form> forms;
    if (-d.D < (Int(1) << 40)) {
        scan_forms_i64(static_cast<long long>(d.D), forms);
    } else {
        scan_forms_big(d.D, forms);
    }
    std::sort(forms.begin(), forms.end());
    return {d, forms, Int(forms.size())};
}

quad_form compose(const quad_form& x, const quad_form& y) {
    if (form_discriminant(x) != form_discriminant(y))
        throw std::invalid_argument("compose: discriminants differ");
    quad_form f1 = x, f2 = y;
    if (f1.a > f2.a) std::swap(f1, f2);
    const Int s = (f1.b + f2.b) / 2;
    const Int n = f2.b - s;
    Int y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        auto [g, u, v] = extgcd(f2.a, f1.a);
        y1 = u;
        d = g;
    }
    Int x2, y2, d1;
    if (s % d == 0) {
        x2 = 0;
        y2 = -1;
        d1 = d;
    } else {
        auto [g, u, v] = extgcd(s, d);
        x2 = u;
        y2 = -v;
        d1 = g;
    }
    const Int v1 = f1.a / d1;
    const Int v2 = f2.a / d1;
    const Int r = floor_mod(y1 * y2 * n - x2 * f2.c, v1);
    quad_form out;
    out.b = f2.b + 2 * v2 * r;
    out.a = v1 * v2;
    out.c = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
    return reduced(out);
}

const char* to_string(splitting s) {
    switch (s) {
        case splitting::split: return "split";
        case splitting::inert: return "inert";
        case splitting::ramified: return "ramified";
    }
    return "?";
}

splitting splitting_symbol(const discriminant& d, const Int& l) {
    require_prime(l, "splitting_symbol");
    if (d.f % l == 0)
        throw std::domain_error("splitting_symbol: prime divides the conductor");
    int k = kronecker(d.D, l);
    if (k == 1) return splitting::split;
    if (k == -1) return splitting::inert;
    return splitting::ramified;
}

int inertia_degree(const discriminant& d, const Int& l) {
    splitting s = splitting_symbol(d, l);
    if (s == splitting::split)
        throw std::domain_error("inertia_degree: prime is decomposed");
    return s == splitting::inert ? 2 : 1;
}

bool is_maximal_at(const discriminant& d, const Int& p) {
    require_prime(p, "is_maximal_at");
    return d.f % p != 0;
}

Int class_order_of_prime(const discriminant& d, const Int& p) {
    require_prime(p, "class_order_of_prime");
    if (d.f % p == 0)
        throw std::domain_error("class_order_of_prime: prime divides the conductor");
    if (kronecker(d.D, p) == -1)
        throw std::domain_error("class_order_of_prime: prime is inert");
    return class_order_of_prime_with_h(d, p, reduced_forms(d).h);
}

norm_length l_p_norm_length(const discriminant& d, const Int& p, unsigned k_max) {
    require_prime(p, "l_p_norm_length");
    if (k_max < 1) throw std::invalid_argument("l_p_norm_length: k_max must be positive");
    if (d.f % p == 0) throw std::domain_error("l_p_norm_length: order not maximal at p");
    const quad_form one = principal_form(d.D);
    const bool extra_units = (d.D == -3 || d.D == -4);
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned j = 0; 2 * j <= k; ++j) {
            unsigned e = k - 2 * j;
            if (e == 0) {
                if (extra_units) return {k, k_max};
                continue;
            }
            if (principal_represents_prime_power(d.D, one, p, e)) return {k, k_max};
        }
    }
    return {std::nullopt, k_max};
}

norm_length l_p_norm_length_scan(const discriminant& d, const Int& p, unsigned k_max) {
    require_prime(p, "l_p_norm_length_scan");
    if (k_max < 1) throw std::invalid_argument("l_p_norm_length_scan: k_max must be positive");
    if (d.f % p == 0) throw std::domain_error("l_p_norm_length_scan: order not maximal at p");
    Int four_pk = 4;
    for (unsigned k = 1; k <= k_max; ++k) {
        four_pk *= p;
        for (Int y = 1; -d.D * y * y <= four_pk; ++y) {
            Int t = four_pk + d.D * y * y;
            Int x = sqrt(t);
            if (x * x == t && floor_mod(x - d.D * y, 2) == 0) return {k, k_max};
        }
    }
    return {std::nullopt, k_max};
}

Int h_inverted(const discriminant& d, const Int& p) {
    require_prime(p, "h_inverted");
    if (d.f % p == 0) throw std::domain_error("h_inverted: order not maximal at p");
    const Int h = reduced_forms(d).h;
    if (kronecker(d.D, p) == -1) return h;
    Int ord = class_order_of_prime_with_h(d, p, h);
    return h / ord;
}

std::vector<order_class_data> enumerate_L_S(const std::vector<Int>& S, const Int& p,
                                            const Int& D_bound, unsigned k_max,
                                            unsigned threads) {
    require_prime(p, "enumerate_L_S");
    for (const Int& l : S) {
        require_prime(l, "enumerate_L_S");
        if (l == p) throw std::invalid_argument("enumerate_L_S: p must not lie in S");
    }
    if (k_max < 1) throw std::invalid_argument("enumerate_L_S: k_max must be positive");

    auto run_range = [&](Int lo, Int hi) {
        std::vector<order_class_data> part;
        for (Int n = lo; n <= hi; ++n) {
            Int D = -n;
            if (!is_valid_discriminant(D)) continue;
            discriminant d = decompose_discriminant(D);
            bool ok = d.f % p != 0;
            for (const Int& l : S) {
                if (!ok) break;
                if (kronecker(d.d_F, l) == 1 || d.f % l == 0) ok = false;
            }
            if (!ok) continue;
            order_class_data row;
            row.D = d;
            row.h = reduced_forms(d).h;
            row.f_S = 1;
            for (const Int& l : S) {
                splitting s = splitting_symbol(d, l);
                row.split_S[l] = s;
                if (s == splitting::inert) row.f_S *= 2;
            }
            row.l_p = l_p_norm_length(d, p, k_max);
            if (kronecker(d.D, p) == -1) {
                row.h_inv = row.h;
            } else {
                row.h_inv = row.h / class_order_of_prime_with_h(d, p, row.h);
            }
            part.push_back(std::move(row));
        }
        return part;
    };

    std::vector<order_class_data> out;
    if (threads <= 1 || D_bound < 64) {
        out = run_range(3, D_bound);
    } else {
        std::vector<std::future<std::vector<order_class_data>>> parts;
        Int chunk = (D_bound - 2 + threads) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            Int lo = 3 + chunk * t;
            Int hi = std::min(Int(lo + chunk - 1), D_bound);
            if (lo > D_bound) break;
            parts.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& fut : parts) {
            auto part = fut.get();
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }

    // exclusion invariant: with some l = 1 mod 12 in S, the exceptional
    // discriminants -3, -4 must have been filtered out as decomposed
    bool has_1_mod_12 = std::any_of(S.begin(), S.end(),
                                    [](const Int& l) { return l % 12 == 1; });
    if (has_1_mod_12) {
        for (const auto& row : out)
            if (row.D.D == -3 || row.D.D == -4)
                throw std::logic_error("enumerate_L_S: exclusion invariant violated");
    }
    return out;
}

}  // namespace ihara::quad
