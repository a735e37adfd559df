#include <doctest.h>

#include "hopfbracket/invariants.hpp"
#include "hopfbracket/torus.hpp"

using namespace hb;

// textual formats pinned by fixtures and CLI output

TEST_CASE("polynomial rendering") {
    TPoly v942;
    v942.set(-3, 1);
    v942.set(-2, -1);
    v942.set(-1, 1);
    v942.set(0, -1);
    v942.set(1, 1);
    v942.set(2, -1);
    v942.set(3, 1);
    CHECK(v942.str() == "1*t^-3-1*t^-2+1*t^-1-1*t^0+1*t^1-1*t^2+1*t^3");
    TPoly half = TPoly::monomial(1, 0, true);
    CHECK(half.str() == "sqrt(t)*(1*t^0)");
    CHECK(TPoly().str() == "0");
}

TEST_CASE("class report json shape") {
    std::vector<TableEntry> tbl{{"0_1", 0, ""}};
    ClassReport rep = classify_table(tbl, 5);
    std::string j = rep.to_json();
    CHECK(j.find("\"k\": 5") != std::string::npos);
    CHECK(j.find("\"members\"") != std::string::npos);
    CHECK(j.find("\"signature\"") != std::string::npos);
    CHECK(j.find("schema_version") != std::string::npos);
}

TEST_CASE("certificate json shape") {
    OrientedDiagram t2 = OrientedDiagram::canonical(tn_diagram(2));
    auto cert = hopf_lower_bound(t2, "T_2", 5, 0, 1);
    std::string j = cert.to_json();
    CHECK(j.find("\"verdict\"") != std::string::npos);
    CHECK(j.find("\"value_set_size\"") != std::string::npos);
}
