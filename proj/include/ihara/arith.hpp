#pragma once

// Exact integer number theory shared by every other module: Kronecker symbol,
// Moebius function, factorization by trial division, deterministic
// Miller-Rabin primality. All public interfaces take and return
// arbitrary-precision integers; fixed-width fast paths are internal.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ihara {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct prime_power {
    Int p;
    unsigned e;
};

// value == product of p^e over factors; primes strictly increasing.
struct prime_factorization {
    Int value;
    std::vector<prime_power> factors;
};

// Kronecker symbol (a|n) with the standard 2-adic and sign conventions.
// Fully multiplicative in n. Throws std::invalid_argument for n == 0.
int kronecker(const Int& a, const Int& n);

// Moebius mu(n), n >= 1.
int moebius(const Int& n);

// Exact factorization by trial division (with a Miller-Rabin early exit on
// the remaining cofactor). Intended for the magnitudes this project uses;
// throws std::invalid_argument if a composite cofactor above 2^40 survives
// trial division.
prime_factorization factorize(const Int& n);

// gcd of a nonempty list of positive integers.
Int gcd_all(const std::vector<Int>& xs);

// Deterministic Miller-Rabin with a proven base set for 64-bit inputs.
// Throws std::invalid_argument for n >= 2^64.
bool is_prime(const Int& n);

// floor divide / nonnegative remainder (C++ '%' truncates toward zero).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

// Renders an exact rational as a fixed-point decimal with `digits` places,
// rounding half away from zero.
std::string decimal_string(const Rat& r, unsigned digits = 6);

}  // namespace ihara
