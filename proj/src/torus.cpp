#include "hopfbracket/torus.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>

namespace hb {

ArrowDiagram tn_diagram(long long n) {
    ArrowDiagram d;
    FreeLoop l;
    for (long long i = 0; i < std::llabs(n); ++i) l.arrows.push_back(n >= 0 ? +1 : -1);
    l.parent = Parent::root();
    d.free_loops.push_back(l);
    return d;
}

TPoly vt_formula(long long n) {
    TPoly num;
    auto add = [&](long long e, int c) {
        Int v = num.coeff(int(e)) + c;
        num.set(int(e), v);
    };
    add(0, 1);
    add(n + 1, -1);
    add(n + 2, -1);
    add(2 * n + 1, 1);
    TPoly den;
    den.set(0, 1);
    den.set(2, -1);
    TPoly q = tpoly_exact_div(num, den);
    q.shift(1, int(n * (n - 1) / 2));
    return q;
}

std::vector<int> class_representatives(int k) {
    if (k < 5) throw DiagramError("KTooSmall", "torus classes need k >= 5");
    int s = (k - 1) / 2;
    std::vector<CycloValue> abs2;
    std::vector<double> n2;
    for (int n = 1; n <= s; ++n) {
        // V_{T_n}(zeta_k) exactly in Z[t]/Phi_k
        TPoly v = vt_formula(n);
        LaurentPoly tp;  // encode t-poly as a poly in the order-k root directly
        CycloValue val = CycloValue::zero(k);
        for (auto& [e, c] : v.terms()) {
            CycloValue m = CycloValue::root_power(k, e);
            std::vector<Int> cc = val.coeffs();
            for (size_t i = 0; i < cc.size(); ++i) cc[i] += c * m.coeffs()[i];
            val = CycloValue(k, std::move(cc));
        }
        (void)tp;
        CycloValue a2 = val.abs_squared();
        for (auto& prev : abs2)
            if (prev == a2)
                throw MonotonicityFailure("duplicate |V|^2 among representatives at n=" + std::to_string(n));
        abs2.push_back(a2);
        n2.push_back(std::abs(val.to_complex()) * std::abs(val.to_complex()));
    }
    for (size_t i = 1; i < n2.size(); ++i)
        if (n2[i] - n2[i - 1] <= 1e-9)
            throw MonotonicityFailure("|V|^2 sequence not strictly increasing at n=" +
                                      std::to_string(i + 1));
    std::vector<int> reps;
    for (int n = 1; n <= s; ++n) reps.push_back(n);
    return reps;
}

CycloValue canonical_value(const CycloValue& v, int k) {
    if (k % 2 == 1) return v;
    CycloValue n = -v;
    return (v < n) ? v : n;
}

ArrowDiagram connected_sum(const ArrowDiagram& a, const ArrowDiagram& b) {
    // both must have an exterior edge (crossed diagrams); offset b's darts
    auto pick_ext = [](const ArrowDiagram& d) -> int {
        for (size_t ei = 0; ei < d.edges.size(); ++ei)
            if (d.edge_is_exterior(int(ei))) return int(ei);
        throw DiagramError("InvalidSite", "no exterior edge for connected sum");
    };
    int ea = pick_ext(a);
    ArrowDiagram out = a;
    int off = 0;
    for (auto& e : a.edges) off = std::max({off, e.a + 1, e.b + 1});
    ArrowDiagram bb = b;
    for (auto& e : bb.edges) {
        e.a += off;
        e.b += off;
    }
    for (auto& c : bb.crossings)
        for (auto& dd : c.darts) dd += off;
    for (auto& cp : bb.comps) {
        cp.outward += off;
        if (cp.parent.kind == Parent::Kind::Face) cp.parent.ref += off;
    }
    for (auto& fl : bb.free_loops)
        if (fl.parent.kind == Parent::Kind::Face) fl.parent.ref += off;
    int eb = pick_ext(bb);
    // cross-splice the two exterior edges: {a1,a2} + {b1,b2} -> {a1,b1}, {b2,a2}
    Edge ea_e = out.edges[size_t(ea)];
    Edge eb_e = bb.edges[size_t(eb)];
    out.edges.erase(out.edges.begin() + ea);
    // append b's structure
    int loop_off = int(out.free_loops.size());
    for (auto& fl : bb.free_loops) {
        FreeLoop f = fl;
        if (f.parent.kind == Parent::Kind::Loop) f.parent.ref += loop_off;
        out.free_loops.push_back(f);
    }
    for (auto& c : bb.crossings) out.crossings.push_back(c);
    for (size_t ei = 0; ei < bb.edges.size(); ++ei)
        if (int(ei) != eb) out.edges.push_back(bb.edges[ei]);
    // orientation of the splice: a1 -> b1's far side; arrows kept on the halves
    Edge j1, j2;
    j1.a = ea_e.a;
    j1.b = eb_e.a;
    j1.arrows = ea_e.arrows;
    j2.a = eb_e.b;
    j2.b = ea_e.b;
    j2.arrows = eb_e.arrows;
    out.edges.push_back(j1);
    out.edges.push_back(j2);
    out.comps.clear();
    ComponentPos cp;
    cp.outward = ea_e.a;
    cp.parent = Parent::root();
    out.comps.push_back(cp);
    out.normalize();
    out.comps[0].outward = out.face_rep(ea_e.a);
    auto rep = out.validate();
    if (!rep.ok) {
        // the naive splice may be orientation-mismatched: swap b's edge ends
        std::swap(out.edges[out.edges.size() - 2].b, out.edges[out.edges.size() - 1].a);
        out.normalize();
        out.comps[0].outward = out.face_rep(ea_e.a);
        out.require_valid("connected_sum");
    }
    return out;
}

LensMoveKit lens_move_kit(int p) {
    LensMoveKit kit;
    kit.p = p;
    return kit;
}

MoveSpec LensMoveKit::rinf(int edge, int end) const {
    MoveSpec m;
    m.kind = MoveSpec::Kind::Rinf;
    m.edge = edge;
    m.end = end;
    m.p = p;
    return m;
}

MoveSpec LensMoveKit::rinf_loop(int loop) const {
    MoveSpec m;
    m.kind = MoveSpec::Kind::Rinf;
    m.loop = loop;
    m.p = p;
    return m;
}

std::string HopfBoundCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["k"] = k;
    j["max_crossings"] = c;
    j["components"] = s;
    j["value_set_size"] = value_set_size;
    j["target"] = target_name;
    j["target_value"] = target_value.str();
    j["verdict"] = bound_holds ? ("h > " + std::to_string(c)) : "inconclusive";
    j["diagrams_evaluated"] = diagrams_evaluated;
    j["seconds"] = seconds;
    return j.dump(2);
}

HopfBoundCertificate hopf_lower_bound(const OrientedDiagram& target, const std::string& name,
                                      int k, int c, int s, const EnumerateOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    HopfBoundCertificate cert;
    cert.k = k;
    cert.c = c;
    cert.s = s;
    cert.target_name = name;
    cert.target_value = canonical_value(jones_at_root(target, k, opt.bracket), k);
    auto values = enumerate_value_set(c, s, k, opt);
    cert.value_set_size = values.size();
    cert.bound_holds = values.count(cert.target_value) == 0;
    cert.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace hb
