#pragma once

// Imaginary quadratic orders through binary quadratic forms: reduction,
// Gauss/Dirichlet composition, class numbers, splitting of small primes,
// norm lengths l_p, inertia degrees and class numbers of p-inverted orders.

#include "ihara/arith.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ihara::quad {

// D = f^2 * d_F with d_F fundamental; D < 0, D = 0 or 1 mod 4.
struct discriminant {
    Int D;
    Int d_F;
    Int f;
};

bool is_valid_discriminant(const Int& D);

// Throws std::invalid_argument for D >= 0 or D = 2,3 mod 4.
discriminant decompose_discriminant(const Int& D);

// Positive definite integral form a x^2 + b xy + c y^2, b^2 - 4ac = D < 0.
struct quad_form {
    Int a, b, c;
    friend bool operator==(const quad_form&, const quad_form&) = default;
};
bool operator<(const quad_form& x, const quad_form& y);  // lexicographic (a, b, c)

Int form_discriminant(const quad_form& g);
quad_form principal_form(const Int& D);

// Gauss reduction: |b| <= a <= c with b >= 0 if |b| == a or a == c.
quad_form reduced(quad_form g);
bool is_reduced(const quad_form& g);

struct form_class_group {
    discriminant D;
    std::vector<quad_form> forms;  // all primitive reduced forms, sorted
    Int h;                         // forms.size()
};

// Enumerates every primitive reduced form of discriminant D.
form_class_group reduced_forms(const discriminant& D);

// Dirichlet composition followed by reduction. Throws std::invalid_argument
// on mismatched discriminants.
quad_form compose(const quad_form& x, const quad_form& y);

enum class splitting { split, inert, ramified };
const char* to_string(splitting s);

// Splitting of l in the order of discriminant D; requires l prime, l
// coprime to the conductor (throws std::domain_error otherwise).
splitting splitting_symbol(const discriminant& D, const Int& l);

// 2 if l inert, 1 if ramified; split l is rejected (std::domain_error).
int inertia_degree(const discriminant& D, const Int& l);

// True iff p does not divide the conductor.
bool is_maximal_at(const discriminant& D, const Int& p);

// Order of the class of a form representing p in the composition group.
// Requires p non-inert and coprime to the conductor.
Int class_order_of_prime(const discriminant& D, const Int& p);

// Least k <= cap with p^k a norm of a non-rational element, if any.
struct norm_length {
    std::optional<unsigned> k;
    unsigned cap = 0;
    bool finite() const { return k.has_value(); }
};

// Production route: decides, per k, whether the principal form represents
// p^k with y != 0, via square roots of D mod 4 p^e and reduction. Exact at
// any scale; never uses composition.
norm_length l_p_norm_length(const discriminant& D, const Int& p, unsigned k_max);

// Definitional route: direct enumeration of x^2 - D y^2 = 4 p^k over the
// bounded y range. Exponential in k; meant for small k and cross-checks.
norm_length l_p_norm_length_scan(const discriminant& D, const Int& p, unsigned k_max);

// Class number of O[1/p]: h for inert p, h / ord([prime above p]) otherwise.
Int h_inverted(const discriminant& D, const Int& p);

struct order_class_data {
    discriminant D;
    Int h;
    std::map<Int, splitting> split_S;  // l -> inert | ramified
    Int f_S;                           // 2^(number of inert l in S)
    norm_length l_p;
    Int h_inv;
};

// All discriminants |D| <= D_bound whose orders lie in L(S): every l in S
// non-decomposed in the field and the order maximal at every l in S and at
// p. Sorted by |D|. Throws std::invalid_argument if p is in S.
std::vector<order_class_data> enumerate_L_S(const std::vector<Int>& S, const Int& p,
                                            const Int& D_bound, unsigned k_max,
                                            unsigned threads = 1);

}  // namespace ihara::quad
