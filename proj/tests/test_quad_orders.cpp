#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ihara/quad_orders.hpp"

#include <set>

using ihara::Int;
using namespace ihara::quad;

namespace {

// ---- test-side ideal-multiplication oracle for composition -------------
//
// A form (a,b,c) maps to the module [a, (-b+sqrt(D))/2]. Elements are kept
// as pairs (x,y) meaning (x + y sqrt(D))/2, or in order-basis coordinates
// (u,v) with respect to {1, (D+sqrt(D))/2}. The product module of the two
// ideals is spanned by the four pairwise generator products; a Hermite
// basis and the norm form of that basis give the composed class. Entirely
// independent of the congruence arithmetic in compose().

struct elt {
    Int x, y;  // (x + y sqrt(D)) / 2
};

elt mul(const elt& A, const elt& B, const Int& D) {
    // (x1+y1 s)(x2+y2 s)/4 with s^2 = D -> ((x1x2 + y1y2 D) + (x1y2+x2y1) s)/4
    Int P = A.x * B.x + A.y * B.y * D;
    Int Q = A.x * B.y + A.y * B.x;
    REQUIRE(P % 2 == 0);
    REQUIRE(Q % 2 == 0);
    return {P / 2, Q / 2};
}

std::tuple<Int, Int, Int> extgcd(Int a, Int b) {
    Int u0 = 1, u1 = 0;
    Int a0 = a, b0 = b;
    while (b0 != 0) {
        Int q = a0 / b0;
        a0 -= q * b0;
        std::swap(a0, b0);
        u0 -= q * u1;
        std::swap(u0, u1);
    }
    if (a0 < 0) { a0 = -a0; u0 = -u0; }
    Int v = (b == 0) ? Int(0) : (a0 - u0 * a) / b;
    return {a0, u0, v};
}

quad_form ideal_product_form(const quad_form& f1, const quad_form& f2) {
    const Int D = form_discriminant(f1);
    REQUIRE(form_discriminant(f2) == D);
    elt g1{2 * f1.a * f2.a, 0};
    elt g2 = {-f1.a * f2.b, f1.a};
    elt g3 = {-f2.a * f1.b, f2.a};
    elt g4 = mul({-f1.b, 1}, {-f2.b, 1}, D);
    // order-basis coordinates (u, v): (x + y sqrt(D))/2 = u + v (D+sqrt(D))/2
    auto coords = [&](const elt& e) {
        Int v = e.y;
        Int num = e.x - e.y * D;
        REQUIRE(num % 2 == 0);
        return std::pair<Int, Int>{num / 2, v};
    };
    std::vector<std::pair<Int, Int>> rows{coords(g1), coords(g2), coords(g3), coords(g4)};
    // Hermite form: unimodular 2-row moves push the gcd of the v-components
    // into row 0 and zero it everywhere else; span is preserved
    for (int i = 1; i < 4; ++i) {
        if (rows[i].second == 0) continue;
        auto [g, s, t] = extgcd(rows[0].second, rows[i].second);
        std::pair<Int, Int> n0{s * rows[0].first + t * rows[i].first,
                               s * rows[0].second + t * rows[i].second};
        std::pair<Int, Int> ni{
            -(rows[i].second / g) * rows[0].first + (rows[0].second / g) * rows[i].first,
            Int(0)};
        rows[0] = n0;
        rows[i] = ni;
    }
    Int g = rows[0].second, u1 = rows[0].first;
    REQUIRE(g > 0);
    Int d = 0;
    for (int i = 1; i < 4; ++i) d = boost::multiprecision::gcd(d, rows[i].first);
    REQUIRE(d > 0);
    // positively oriented basis alpha = d, beta = u1 + g*(D+sqrt(D))/2
    // back to (x,y) pairs: alpha = (2d, 0), beta = (2u1 + gD, g)
    Int ax = 2 * d;
    Int bx = 2 * u1 + g * D, by = g;
    Int norm_M = d * g;
    auto N = [&](Int x, Int y) { return (x * x - D * y * y) / 4; };
    Int qa = N(ax, 0) / norm_M;
    Int qc = N(bx, by) / norm_M;
    // cross term: N(alpha+beta) - N(alpha) - N(beta) = b coefficient
    Int qb = (N(ax + bx, by) - N(ax, 0) - N(bx, by)) / norm_M;
    REQUIRE(qb * qb - 4 * qa * qc == D);
    // the basis-norm recipe yields the conjugate class; twist back
    return reduced({qa, -qb, qc});
}

discriminant disc(long long D) { return decompose_discriminant(Int(D)); }

}  // namespace

TEST_CASE("discriminant decomposition") {
    auto d4 = disc(-4);
    CHECK(d4.d_F == -4);
    CHECK(d4.f == 1);
    auto d12 = disc(-12);
    CHECK(d12.d_F == -3);
    CHECK(d12.f == 2);
    auto d23 = disc(-23);
    CHECK(d23.d_F == -23);
    CHECK(d23.f == 1);
    auto d48 = disc(-48);
    CHECK(d48.d_F == -3);
    CHECK(d48.f == 4);
    auto d32 = disc(-32);
    CHECK(d32.d_F == -8);
    CHECK(d32.f == 2);
    CHECK_THROWS_AS((void)decompose_discriminant(Int(-5)), std::invalid_argument);
    CHECK_THROWS_AS((void)decompose_discriminant(Int(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)decompose_discriminant(Int(8)), std::invalid_argument);
    // reassembly over a range
    for (long long n = 3; n <= 4000; ++n) {
        Int D = -n;
        if (!is_valid_discriminant(D)) continue;
        auto d = decompose_discriminant(D);
        CHECK(d.f * d.f * d.d_F == d.D);
        CHECK(is_valid_discriminant(d.d_F));
        // d_F fundamental: either 1 mod 4 squarefree, or 4k with k = 2,3 mod 4 squarefree
        auto dd = decompose_discriminant(d.d_F);
        CHECK(dd.f == 1);
    }
}

TEST_CASE("reduced form enumeration") {
    auto g3 = reduced_forms(disc(-3));
    CHECK(g3.h == 1);
    CHECK(g3.forms == std::vector<quad_form>{{1, 1, 1}});
    auto g4 = reduced_forms(disc(-4));
    CHECK(g4.h == 1);
    CHECK(g4.forms == std::vector<quad_form>{{1, 0, 1}});
    auto g23 = reduced_forms(disc(-23));
    CHECK(g23.h == 3);
    CHECK(g23.forms == std::vector<quad_form>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
    CHECK(reduced_forms(disc(-47)).h == 5);
    // imprimitive forms are not classes: the conductor-2 order in Q(sqrt(-7))
    CHECK(reduced_forms(disc(-28)).h == 1);

    for (long long n = 3; n <= 2000; ++n) {
        Int D = -n;
        if (!is_valid_discriminant(D)) continue;
        auto cg = reduced_forms(decompose_discriminant(D));
        CHECK(cg.h == Int(cg.forms.size()));
        int principal_count = 0;
        for (const auto& f : cg.forms) {
            CHECK(is_reduced(f));
            CHECK(form_discriminant(f) == D);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::gcd(f.a, f.b), f.c) == 1);
            if (f == principal_form(D)) ++principal_count;
        }
        CHECK(principal_count == 1);
    }
}

TEST_CASE("class number conductor formula") {
    // h(f^2 dF) = h(dF) f prod_{q | f} (1 - (dF|q)/q) / [unit index]
    for (long long dF = -3; dF >= -80; --dF) {
        if (!is_valid_discriminant(Int(dF))) continue;
        if (decompose_discriminant(Int(dF)).f != 1) continue;
        Int h1 = reduced_forms(disc(dF)).h;
        for (long long f = 2; f <= 6; ++f) {
            Int num = h1 * f;
            Int den = 1;
            for (long long q : {2, 3, 5}) {
                if (f % q != 0) continue;
                num *= q - ihara::kronecker(Int(dF), Int(q));
                den *= q;
            }
            if (dF == -3) den *= 3;
            if (dF == -4) den *= 2;
            REQUIRE(num % den == 0);
            CHECK(reduced_forms(disc(dF * f * f)).h == num / den);
        }
    }
}

TEST_CASE("composition: known values") {
    auto d23 = disc(-23);
    quad_form p = principal_form(d23.D);
    quad_form x{2, 1, 3};
    CHECK(compose(p, x) == x);
    CHECK(compose(x, quad_form{2, -1, 3}) == p);
    CHECK(compose(x, x) == quad_form{2, -1, 3});
    CHECK_THROWS_AS((void)compose(x, principal_form(Int(-4))), std::invalid_argument);
}

TEST_CASE("composition agrees with ideal multiplication") {
    for (long long n = 3; n <= 400; ++n) {
        Int D = -n;
        if (!is_valid_discriminant(D)) continue;
        auto cg = reduced_forms(decompose_discriminant(D));
        for (const auto& f1 : cg.forms)
            for (const auto& f2 : cg.forms)
                CHECK(compose(f1, f2) == ideal_product_form(f1, f2));
    }
}

TEST_CASE("composition group laws") {
    int discs = 0;
    for (long long n = 3; n <= 2000; ++n) {
        Int D = -n;
        if (!is_valid_discriminant(D)) continue;
        ++discs;
        auto cg = reduced_forms(decompose_discriminant(D));
        const quad_form one = principal_form(D);
        std::set<quad_form> members(cg.forms.begin(), cg.forms.end());
        for (const auto& f : cg.forms) {
            CHECK(compose(one, f) == f);
            CHECK(compose(f, quad_form{f.a, -f.b, f.c}) == one);
        }
        for (const auto& f1 : cg.forms)
            for (const auto& f2 : cg.forms) {
                auto p12 = compose(f1, f2);
                CHECK(members.count(p12) == 1);  // closure
                CHECK(p12 == compose(f2, f1));   // commutativity
            }
        // associativity, exhaustive
        for (const auto& f1 : cg.forms)
            for (const auto& f2 : cg.forms) {
                auto p12 = compose(f1, f2);
                for (const auto& f3 : cg.forms)
                    CHECK(compose(p12, f3) == compose(f1, compose(f2, f3)));
            }
    }
    CHECK(discs == 1000);
}

TEST_CASE("splitting, inertia, maximality") {
    CHECK(splitting_symbol(disc(-3), 13) == splitting::split);
    CHECK(splitting_symbol(disc(-7), 13) == splitting::inert);
    CHECK(splitting_symbol(disc(-52), 13) == splitting::ramified);
    CHECK(splitting_symbol(disc(-39), 13) == splitting::ramified);
    CHECK_THROWS_AS((void)splitting_symbol(disc(-12), 2), std::domain_error);

    CHECK(inertia_degree(disc(-7), 13) == 2);
    CHECK(inertia_degree(disc(-8), 13) == 2);
    CHECK(inertia_degree(disc(-52), 13) == 1);
    CHECK_THROWS_AS((void)inertia_degree(disc(-3), 13), std::domain_error);

    CHECK_FALSE(is_maximal_at(disc(-12), 2));
    CHECK(is_maximal_at(disc(-12), 3));
    CHECK(is_maximal_at(disc(-23), 2));
}

TEST_CASE("class order of the prime above p") {
    CHECK(class_order_of_prime(disc(-23), 2) == 3);
    CHECK(class_order_of_prime(disc(-4), 2) == 1);
    CHECK(class_order_of_prime(disc(-20), 3) == 2);
    CHECK(class_order_of_prime(disc(-31), 2) == 3);
    CHECK_THROWS_AS((void)class_order_of_prime(disc(-23), 5), std::domain_error);  // inert
    CHECK_THROWS_AS((void)class_order_of_prime(disc(-12), 2), std::domain_error);  // 2 | f
}

TEST_CASE("norm length: known values") {
    CHECK(*l_p_norm_length(disc(-4), 2, 10).k == 1);
    CHECK(*l_p_norm_length(disc(-23), 2, 10).k == 3);
    CHECK_FALSE(l_p_norm_length(disc(-20), 2, 30).finite());
    CHECK(l_p_norm_length(disc(-20), 2, 30).cap == 30);
    CHECK(*l_p_norm_length(disc(-7), 2, 10).k == 1);
    CHECK(*l_p_norm_length(disc(-8), 2, 10).k == 1);
    CHECK(*l_p_norm_length(disc(-11), 3, 10).k == 1);
    // exceptional units: 2 is inert in both, yet p^2 is a norm of p*omega
    CHECK(*l_p_norm_length(disc(-3), 2, 10).k == 2);
    CHECK(*l_p_norm_length(disc(-4), 3, 10).k == 2);
    CHECK(*l_p_norm_length(disc(-3), 3, 10).k == 1);  // ramified, principal
    CHECK_THROWS_AS((void)l_p_norm_length(disc(-12), 2, 10), std::domain_error);
    CHECK_THROWS_AS((void)l_p_norm_length(disc(-7), 2, 0), std::invalid_argument);
}

TEST_CASE("norm length: production route equals definitional scan") {
    struct grid {
        long long p;
        unsigned cap;
    };
    for (grid g : {grid{2, 12}, grid{3, 8}, grid{5, 6}}) {
        for (long long n = 3; n <= 300; ++n) {
            Int D = -n;
            if (!is_valid_discriminant(D)) continue;
            auto d = decompose_discriminant(D);
            if (d.f % g.p == 0) continue;
            auto fast = l_p_norm_length(d, g.p, g.cap);
            auto scan = l_p_norm_length_scan(d, g.p, g.cap);
            CHECK(fast.k == scan.k);
        }
    }
}

TEST_CASE("norm length vs class-order characterization") {
    for (long long p : {2, 3, 5}) {
        for (long long n = 5; n <= 500; ++n) {
            Int D = -n;
            if (!is_valid_discriminant(D)) continue;
            auto d = decompose_discriminant(D);
            if (d.f % p == 0) continue;
            auto l = l_p_norm_length(d, p, 25);
            int kr = ihara::kronecker(d.D, Int(p));
            if (kr == -1) {
                CHECK_FALSE(l.finite());
            } else if (kr == 0) {
                Int ord = class_order_of_prime(d, p);
                if (ord == 1)
                    CHECK(*l.k == 1);
                else
                    CHECK_FALSE(l.finite());
            } else {
                Int ord = class_order_of_prime(d, p);
                if (ord <= 25)
                    CHECK(Int(*l.k) == ord);
                else
                    CHECK_FALSE(l.finite());
            }
        }
    }
}

TEST_CASE("h_inverted") {
    CHECK(h_inverted(disc(-23), 2) == 1);
    CHECK(h_inverted(disc(-23), 5) == 3);  // inert
    CHECK(h_inverted(disc(-20), 3) == 1);
    CHECK(h_inverted(disc(-20), 2) == 1);  // ramified, order 2, h = 2
    CHECK_THROWS_AS((void)h_inverted(disc(-12), 2), std::domain_error);
    for (long long p : {2, 3, 5}) {
        for (long long n = 3; n <= 500; ++n) {
            Int D = -n;
            if (!is_valid_discriminant(D)) continue;
            auto d = decompose_discriminant(D);
            if (d.f % p == 0) continue;
            Int h = reduced_forms(d).h;
            Int hi = h_inverted(d, p);
            CHECK(h % hi == 0);
            if (ihara::kronecker(d.D, Int(p)) == -1) {
                CHECK(hi == h);
            } else {
                CHECK(hi * class_order_of_prime(d, p) == h);
            }
        }
    }
}

TEST_CASE("enumerate_L_S") {
    auto rows = enumerate_L_S({Int(13)}, 2, 8, 30);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].D.D == -7);
    CHECK(rows[1].D.D == -8);
    for (const auto& r : rows) {
        CHECK(r.f_S == 2);
        CHECK(r.h == 1);
        CHECK(r.h_inv == 1);
        CHECK(*r.l_p.k == 1);
        CHECK(r.split_S.at(13) == splitting::inert);
    }

    // -12 stays excluded at any bound: 2 divides its conductor
    auto rows25 = enumerate_L_S({Int(13)}, 2, 25, 30);
    std::vector<long long> ds;
    for (const auto& r : rows25) ds.push_back(static_cast<long long>(r.D.D));
    CHECK(ds == std::vector<long long>{-7, -8, -11, -15, -19, -20, -24});
    // 13 splits in Q(sqrt(-23)): -23 = 4^2 mod 13, so -23 is not admissible
    for (long long d : ds) CHECK(d != -23);

    // S = {5}: -4 excluded (5 = 1 mod 4 decomposes in Q(i)), -3 admitted
    auto rows5 = enumerate_L_S({Int(5)}, 2, 4, 30);
    REQUIRE(rows5.size() == 1);
    CHECK(rows5[0].D.D == -3);
    CHECK(*rows5[0].l_p.k == 2);

    CHECK_THROWS_AS((void)enumerate_L_S({Int(13)}, 13, 10, 30), std::invalid_argument);

    // thread-count invariance
    auto seq = enumerate_L_S({Int(13)}, 2, 600, 18, 1);
    auto par = enumerate_L_S({Int(13)}, 2, 600, 18, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].D.D == par[i].D.D);
        CHECK(seq[i].h == par[i].h);
        CHECK(seq[i].f_S == par[i].f_S);
        CHECK(seq[i].l_p.k == par[i].l_p.k);
        CHECK(seq[i].h_inv == par[i].h_inv);
    }
}
