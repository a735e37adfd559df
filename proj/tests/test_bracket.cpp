#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "hopfbracket/bracket.hpp"
#include "hopfbracket/torus.hpp"
#include "oracle.hpp"

using namespace hb;

namespace {
LaurentPoly ap(int c, int e) { return LaurentPoly::monomial(c, e); }
}

TEST_CASE("tn closed form small values") {
    CHECK(tn_bracket_closed_form(0) == LaurentPoly(Int(1)));
    CHECK(tn_bracket_closed_form(1) == ap(1, 6));
    // <T_-1> = 1, <T_-2> = A^6
    CHECK(tn_bracket_closed_form(-1) == LaurentPoly(Int(1)));
    CHECK(tn_bracket_closed_form(-2) == ap(1, 6));
    // <T_2> = A^18 (t + t^3 - t^4), t = A^-4
    LaurentPoly t2 = ap(1, 14) + ap(1, 6) - ap(1, 2);
    CHECK(tn_bracket_closed_form(2) == t2);
}

TEST_CASE("reduce_forest basis cases") {
    OvalForest f;
    f.nodes.push_back({0, -1, {}});
    f.roots = {0};
    SkeinVector sv = reduce_forest(f);
    REQUIRE(sv.size() == 1);
    CHECK(sv.at(0) == LaurentPoly(Int(1)));

    OvalForest f5;
    f5.nodes.push_back({5, -1, {}});
    f5.roots = {0};
    sv = reduce_forest(f5);
    REQUIRE(sv.size() == 1);
    CHECK(sv.at(5) == LaurentPoly(Int(1)));

    // nested arrowless pair: delta * T_0
    OvalForest f2;
    f2.nodes.push_back({0, -1, {1}});
    f2.nodes.push_back({0, 0, {}});
    f2.roots = {0};
    sv = reduce_forest(f2);
    REQUIRE(sv.size() == 1);
    CHECK(sv.at(0) == LaurentPoly::delta());
}

TEST_CASE("bracket: unknot, split union, T_n ovals") {
    ArrowDiagram u;
    u.free_loops.push_back(FreeLoop{{}, Parent::root()});
    CHECK(bracket(u).bracket == LaurentPoly(Int(1)));

    ArrowDiagram uu = u;
    uu.free_loops.push_back(FreeLoop{{}, Parent::root()});
    CHECK(bracket(uu).bracket == LaurentPoly::delta());

    for (long long n = -8; n <= 8; ++n) {
        ArrowDiagram tn = tn_diagram(n);
        CHECK(bracket(tn).bracket == tn_bracket_closed_form(n));
    }
}

TEST_CASE("bracket: split union with an arrowless loop is multiplicative") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 20; ++it) {
        ArrowDiagram d = gen::random_diagram(rng, 4, 4);
        LaurentPoly b = bracket(d).bracket;
        ArrowDiagram d2 = d;
        d2.free_loops.push_back(FreeLoop{{}, Parent::root()});
        CHECK(bracket(d2).bracket == LaurentPoly::delta() * b);
    }
}

TEST_CASE("jones at t=1 is (-2)^(c-1)") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 25; ++it) {
        ArrowDiagram d = gen::random_diagram(rng, 5, 4);
        OrientedDiagram od = OrientedDiagram::canonical(d);
        int c = d.link_component_count();
        Int want = 1;
        for (int i = 1; i < c; ++i) want *= -2;
        CHECK(jones(od).at_one() == want);
    }
}

TEST_CASE("oracle equivalence: engine jones equals classical state sum after elimination") {
    std::mt19937_64 rng(31337);
    int done = 0;
    for (int it = 0; it < 80 && done < 60; ++it) {
        ArrowDiagram d = gen::random_diagram(rng, 5, 5);
        OrientedDiagram od = OrientedDiagram::canonical(d);
        TPoly left = jones(od);
        auto [elim, trace] = eliminate_arrows_oriented(od);
        REQUIRE(elim.d.arrow_total() == 0);
        TPoly right = oracle::classical_jones(elim);
        CHECK(left == right);
        ++done;
    }
    CHECK(done >= 60);
}

TEST_CASE("jones_at_root examples") {
    // any knot at k=3: V = 1
    ArrowDiagram t2 = tn_diagram(2);
    OrientedDiagram od2 = OrientedDiagram::canonical(t2);
    CHECK(jones_at_root(od2, 3) == CycloValue::one(12));

    // T_4 at k=4: V = -1 = -V_{T_0}(i)
    OrientedDiagram od4 = OrientedDiagram::canonical(tn_diagram(4));
    CHECK(jones_at_root(od4, 4) == -CycloValue::one(16));

    // T_2 at k=6: |V|^2 = 3
    CycloValue v = jones_at_root(od2, 6);
    Int n;
    REQUIRE(v.abs_squared().is_integer(&n));
    CHECK(n == 3);
}

TEST_CASE("torus family periodicity at roots (lemma)") {
    for (int k = 3; k <= 12; ++k) {
        int sign = (k % 2 == 0) ? -1 : +1;
        for (long long n = -6; n <= 6; ++n) {
            // evaluate VT exactly in Z[t]/Phi_k
            auto eval = [&](long long m) {
                TPoly v = vt_formula(m);
                CycloValue val = CycloValue::zero(k);
                for (auto& [e, c] : v.terms()) {
                    CycloValue r = CycloValue::root_power(k, e);
                    auto cc = val.coeffs();
                    for (size_t i = 0; i < cc.size(); ++i) cc[i] += c * r.coeffs()[i];
                    val = CycloValue(k, std::move(cc));
                }
                return val;
            };
            CycloValue a = eval(n), b = eval(n + k);
            CHECK((sign > 0 ? a : -a) == b);
        }
    }
}

TEST_CASE("skein decomposition contracts to the bracket") {
    std::mt19937_64 rng(555);
    for (int it = 0; it < 15; ++it) {
        ArrowDiagram d = gen::random_diagram(rng, 4, 4);
        BracketResult r = bracket(d);
        CHECK(contract(r.skein) == r.bracket);
        CHECK(r.states_evaluated == (uint64_t(1) << d.crossings.size()));
    }
}

TEST_CASE("bracket is independent of the thread count") {
    std::mt19937_64 rng(808);
    ArrowDiagram d = gen::random_diagram(rng, 5, 4);
    BracketOptions o1, o4;
    o1.threads = 1;
    o4.threads = 4;
    CHECK(bracket(d, o1).bracket == bracket(d, o4).bracket);
}

TEST_CASE("bracket crossing limit") {
    std::mt19937_64 rng(12);
    ArrowDiagram d = gen::random_diagram(rng, 6, 0);
    BracketOptions opt;
    opt.max_crossings = 2;
    if (int(d.crossings.size()) > 2) CHECK_THROWS_AS(bracket(d, opt), TooManyCrossings);
}

TEST_CASE("outer face choice does not change the bracket of arrowless diagrams") {
    ArrowDiagram t = import_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]");
    LaurentPoly b0 = bracket(t).bracket;
    for (Dart f : t.all_face_reps()) {
        ArrowDiagram d = t;
        d.comps[0].outward = f;
        d.normalize();
        CHECK(bracket(d).bracket == b0);
    }
}
