#include <doctest.h>

#include <random>

#include "hopfbracket/cyclo.hpp"
#include "hopfbracket/laurent.hpp"

using namespace hb;

namespace {
LaurentPoly ap(int c, int e) { return LaurentPoly::monomial(c, e); }
}

TEST_CASE("laurent basics") {
    LaurentPoly z;
    CHECK(z.is_zero());
    LaurentPoly p = ap(1, 2) + ap(-1, -2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(-2) == -1);
    CHECK((p + (-p)).is_zero());
    CHECK(p * LaurentPoly(Int(1)) == p);
    CHECK(p.str() == "-1*A^-2+1*A^2");
    CHECK(LaurentPoly::delta().str() == "-1*A^-2-1*A^2");
}

TEST_CASE("tpoly_of residues") {
    CHECK(tpoly_of(ap(1, -4)) == TPoly::monomial(1, 1));
    TPoly half = tpoly_of(ap(1, -2));
    CHECK(half.half_shift());
    CHECK(half.coeff(0) == 1);
    CHECK(tpoly_of(ap(1, -4) + ap(1, -12)) == TPoly::monomial(1, 1) + TPoly::monomial(1, 3));
    CHECK_THROWS_AS(tpoly_of(ap(1, 0) + ap(1, -2)), MixedResidue);
    // round trip
    TPoly t = TPoly::monomial(3, -2) + TPoly::monomial(-1, 5);
    CHECK(tpoly_of(apoly_of(t)) == t);
}

TEST_CASE("tpoly mod cyclic: paper example values") {
    // V_{9_42} = t^-3 - t^-2 + t^-1 - 1 + t - t^2 + t^3
    TPoly v942;
    v942.set(-3, 1);
    v942.set(-2, -1);
    v942.set(-1, 1);
    v942.set(0, -1);
    v942.set(1, 1);
    v942.set(2, -1);
    v942.set(3, 1);
    TPoly r = tpoly_mod_cyclic(v942, 5);
    TPoly want;
    want.set(0, -1);
    want.set(1, 1);
    want.set(4, 1);
    CHECK(r == want);
    // V_{10_124} = t^4 + t^6 - t^10
    TPoly v10;
    v10.set(4, 1);
    v10.set(6, 1);
    v10.set(10, -1);
    CHECK(tpoly_mod_cyclic(v10, 5) == want);
    CHECK(tpoly_mod_cyclic(TPoly(Int(1)), 7) == TPoly(Int(1)));
}

TEST_CASE("tpoly mod quotient") {
    TPoly q6 = quotient_divisor(6);
    CHECK(tpoly_mod_quotient(q6, 6).is_zero());
    TPoly t6 = TPoly::monomial(1, 6);
    CHECK(tpoly_mod_quotient(t6, 6) == TPoly(Int(1)));
    CHECK(tpoly_mod_quotient(TPoly(Int(1)), 6) == TPoly(Int(1)));
    // derived oracle: t^6 - 1 is exactly divisible by (t^6-1)/(t+1)
    TPoly diff = t6 - TPoly(Int(1));
    TPoly quo = tpoly_exact_div(diff, q6);
    TPoly tp1;
    tp1.set(0, 1);
    tp1.set(1, 1);
    CHECK(quo == tp1);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(20) == 8);
    // sum of degrees over divisors = n
    for (int n : {6, 12, 20, 24}) {
        int s = 0;
        for (int dd = 1; dd <= n; ++dd)
            if (n % dd == 0) s += euler_phi(dd);
        CHECK(s == n);
    }
}

TEST_CASE("lp_eval_cyclo example values") {
    CHECK(lp_eval_cyclo(LaurentPoly(Int(1)), 20) == CycloValue::one(20));
    CHECK(lp_eval_cyclo(ap(1, 20) - LaurentPoly(Int(1)), 20).is_zero());
    CHECK(lp_eval_cyclo(ap(1, -20) - LaurentPoly(Int(1)), 20).is_zero());
}

TEST_CASE("cyclo abs squared examples") {
    CHECK(CycloValue::one(8).abs_squared() == CycloValue::one(8));
    CHECK(CycloValue::root_power(5, 1).abs_squared() == CycloValue::one(5));
    CycloValue v = CycloValue::one(4) + CycloValue::root_power(4, 1);  // 1 + i
    Int n;
    CHECK(v.abs_squared().is_integer(&n));
    CHECK(n == 2);
}

TEST_CASE("property: evaluation is a ring morphism") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + int(rng() % 40);
        auto rnd = [&]() {
            LaurentPoly p;
            int terms = 1 + int(rng() % 5);
            for (int t = 0; t < terms; ++t)
                p += LaurentPoly::monomial(int(rng() % 9) - 4, int(rng() % 21) - 10);
            return p;
        };
        LaurentPoly p = rnd(), q = rnd();
        CHECK(lp_eval_cyclo(p * q, n) == lp_eval_cyclo(p, n) * lp_eval_cyclo(q, n));
        CHECK(lp_eval_cyclo(p + q, n) == lp_eval_cyclo(p, n) + lp_eval_cyclo(q, n));
        // float agreement
        auto exact = lp_eval_cyclo(p, n).to_complex();
        auto approx = lp_eval_complex(p, n);
        CHECK(std::abs(exact - approx) <= 1e-9 * (1.0 + std::abs(approx)));
    }
}

TEST_CASE("property: mod cyclic difference divisible by t^k-1") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        int k = 2 + int(rng() % 9);
        TPoly p;
        int terms = 1 + int(rng() % 6);
        for (int t = 0; t < terms; ++t) {
            int e = int(rng() % 21) - 10;
            Int c = p.coeff(e) + (int(rng() % 9) - 4);
            p.set(e, c);
        }
        TPoly r = tpoly_mod_cyclic(p, k);
        TPoly diff = p - r;
        if (diff.is_zero()) continue;
        // clear negatives with a power of t^k, then divide exactly
        int lo = diff.terms().begin()->first;
        if (lo < 0) diff.shift(1, ((-lo + k - 1) / k) * k);
        TPoly den;
        den.set(0, -1);
        den.set(k, 1);
        CHECK_NOTHROW(tpoly_exact_div(diff, den));
    }
}

TEST_CASE("property: abs squared is conj invariant and multiplicative") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + int(rng() % 20);
        auto rnd = [&]() {
            auto v = CycloValue::zero(n);
            auto cc = v.coeffs();
            for (auto& x : cc) x = int(rng() % 7) - 3;
            return CycloValue(n, cc);
        };
        CycloValue v = rnd(), w = rnd();
        CHECK(v.conj().conj() == v);
        CHECK(v.abs_squared().conj() == v.abs_squared());
        CHECK((v * w).abs_squared() == v.abs_squared() * w.abs_squared());
    }
}
