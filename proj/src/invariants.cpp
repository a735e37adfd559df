#include "hopfbracket/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hb {

int theorem_sign(int k) {
    if (k < 3) throw KTooSmall(k);
    return (k % 2 == 1) ? +1 : -1;
}

int divisor_sign(int k, int a) {
    if (a != 1 && a < 3) throw NotDivisor(a, k);
    if (a == 0 || k % a != 0) throw NotDivisor(a, k);
    int b = k / a;
    return (a % 2 == 0 && b % 2 == 1) ? -1 : +1;
}

KMoveWitness check_kmove_theorem(const OrientedDiagram& od, const MoveSpec& kmove,
                                 const BracketOptions& opt) {
    if (kmove.kind != MoveSpec::Kind::KMove) throw InvalidSite("expected a KMove spec");
    int k = kmove.k;
    if (k < 3) throw KTooSmall(k);
    KMoveWitness w;
    w.before = jones_at_root(od, k, opt);
    OrientedMoveResult after = apply_oriented(od, kmove);
    w.after = jones_at_root(after.od, k, opt);
    CycloValue expect = theorem_sign(k) > 0 ? w.before : -w.before;
    w.holds = (w.after == expect);
    return w;
}

bool KClassSignature::operator<(const KClassSignature& o) const {
    if (k != o.k) return k < o.k;
    if (linking != o.linking) return linking < o.linking;
    if (payload.half_shift() != o.payload.half_shift()) return payload.half_shift() < o.payload.half_shift();
    auto &a = payload.terms(), &b = o.payload.terms();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string KClassSignature::str() const {
    std::string s = payload.str();
    if (!linking.empty()) {
        s += " lk[";
        for (size_t i = 0; i < linking.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(linking[i]);
        }
        s += "]";
    }
    return s;
}

namespace {

// coefficient vector of a TPoly with exponents in [0, n)
std::vector<Int> coeff_vec(const TPoly& p, int n) {
    std::vector<Int> v(size_t(n), Int(0));
    for (auto& [e, c] : p.terms()) {
        if (e < 0 || e >= n) throw std::logic_error("unreduced signature payload");
        v[size_t(e)] = c;
    }
    return v;
}

}  // namespace

KClassSignature signature(const OrientedDiagram& od, int k, const BracketOptions& opt) {
    if (k < 3) throw KTooSmall(k);
    KClassSignature sig;
    sig.k = k;
    sig.even = (k % 2 == 0);
    TPoly v = jones(od, opt);
    // even component count carries the sqrt(t) factor; fold it in so the
    // congruences live in plain t-polynomials
    if (v.half_shift()) {
        TPoly root = TPoly::monomial(1, 0, true);
        v = v * root;  // sqrt(t) * sqrt(t) P = t P
    }
    if (!sig.even) {
        sig.payload = tpoly_mod_cyclic(v, k);
    } else {
        TPoly p1 = tpoly_mod_quotient(v, k);
        TPoly shift = TPoly::monomial(1, k / 2);
        TPoly p2 = tpoly_mod_quotient(v * shift, k);
        sig.payload = coeff_vec(p1, k - 1) <= coeff_vec(p2, k - 1) ? p1 : p2;
    }
    int c = od.d.link_component_count();
    if (c >= 2) {
        auto [elim, tr] = eliminate_arrows_oriented(od);
        auto lk = linking_matrix(elim);
        for (size_t i = 0; i < lk.size(); ++i)
            for (size_t j = i + 1; j < lk.size(); ++j)
                sig.linking.push_back(((lk[i][j] % k) + k) % k);
        std::sort(sig.linking.begin(), sig.linking.end());
    }
    return sig;
}

std::optional<int> arf_from_jones(const OrientedDiagram& od, const BracketOptions& opt) {
    CycloValue v = jones_at_root(od, 4, opt);  // Z[A]/Phi_16, t = i
    if (v.is_zero()) return std::nullopt;
    int c = od.d.link_component_count();
    // V(i) = (-2 sqrt 2)^{c-1} (-1)^{arf}; sqrt2 = A^2 + A^-2 at a primitive
    // 16th root (A^2 is a primitive 8th root e^{i pi/4})
    CycloValue sqrt2 = CycloValue::root_power(16, 2) + CycloValue::root_power(16, 14);
    CycloValue base = -(sqrt2 + sqrt2);  // -2 sqrt 2
    CycloValue mag = CycloValue::one(16);
    for (int i = 1; i < c; ++i) mag = mag * base;
    if (v == mag) return 0;
    if (v == -mag) return 1;
    throw DiagramError("InconsistentValue", "V(i) matches neither Arf branch");
}

Int colorings3(const OrientedDiagram& od, const BracketOptions& opt) {
    CycloValue v = jones_at_root(od, 6, opt);  // t = e^{i pi/3}, ring Z[A]/Phi_24
    CycloValue a2 = v.abs_squared();
    Int n;
    if (!a2.is_integer(&n)) throw DiagramError("NonIntegerResult", "|V|^2 not an integer");
    return 3 * n;
}

bool det_congruence(const OrientedDiagram& dl, const OrientedDiagram& dlp, int k,
                    const BracketOptions& opt) {
    if (k < 4 || k % 2 != 0) throw DiagramError("KTooSmall", "determinant congruence needs even k >= 4");
    int p = k / 2;
    int c1 = dl.d.link_component_count(), c2 = dlp.d.link_component_count();
    if (c1 != c2) throw DiagramError("ComponentMismatch", "links have different component counts");
    int f = (c1 + 1) % 2;
    // evaluate i^f V(-1) exactly in Z[A]/Phi_8 (t = -1 at A a primitive 8th root)
    auto val = [&](const OrientedDiagram& od) {
        LaurentPoly v = jones_apoly(od, opt);
        if (f == 1) {
            // multiply by i = A^2 (A = e^{i pi/4}): i = (A^{-4})^... use A^2
            v.shift(1, 2);
        }
        return lp_eval_cyclo(v, 8);
    };
    CycloValue a = val(dl), b = val(dlp);
    CycloValue want = (p % 2 == 0) ? a : -a;
    CycloValue diff = b - want;
    // all coefficients divisible by k
    for (auto& co : diff.coeffs())
        if (co % k != 0) return false;
    return true;
}

std::vector<int> linking_mod_k(const OrientedDiagram& od, int k) {
    if (k < 1) throw DiagramError("KTooSmall", "modulus must be >= 1");
    if (od.d.link_component_count() < 2)
        throw DiagramError("ComponentMismatch", "need at least 2 components");
    auto [elim, tr] = eliminate_arrows_oriented(od);
    auto lk = linking_matrix(elim);
    std::vector<int> out;
    for (size_t i = 0; i < lk.size(); ++i)
        for (size_t j = i + 1; j < lk.size(); ++j) out.push_back(((lk[i][j] % k) + k) % k);
    return out;
}

std::vector<TableEntry> load_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DiagramError("MalformedTable", "cannot open " + path);
    std::vector<TableEntry> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("name,", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::stringstream ss(line);
        TableEntry e;
        std::string cr;
        if (!std::getline(ss, e.name, ',')) continue;
        std::getline(ss, cr, ',');
        std::getline(ss, e.pd);
        e.crossings = cr.empty() ? 0 : std::stoi(cr);
        out.push_back(e);
    }
    return out;
}

ClassReport classify_table(const std::vector<TableEntry>& table, int k, const BracketOptions& opt) {
    ClassReport rep;
    rep.k = k;
    std::map<KClassSignature, std::vector<std::string>> classes;
    for (auto& e : table) {
        try {
            ArrowDiagram d = import_pd(e.pd);
            OrientedDiagram od = OrientedDiagram::canonical(d);
            KClassSignature s = signature(od, k, opt);
            classes[s].push_back(e.name);
        } catch (const std::exception& ex) {
            rep.failures.emplace_back(e.name, ex.what());
        }
    }
    for (auto& [s, members] : classes) {
        ClassReport::Class c;
        c.signature = s.str();
        c.members = members;
        std::sort(c.members.begin(), c.members.end());
        rep.classes.push_back(c);
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ClassReport::Class& a, const ClassReport::Class& b) {
                  return a.members.front() < b.members.front();
              });
    return rep;
}

std::string ClassReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["table"] = table;
    j["k"] = k;
    j["classes"] = nlohmann::ordered_json::array();
    for (auto& c : classes) {
        nlohmann::ordered_json e;
        e["signature"] = c.signature;
        e["members"] = c.members;
        e["singleton"] = (c.members.size() == 1);
        j["classes"].push_back(e);
    }
    if (!failures.empty()) {
        j["failures"] = nlohmann::ordered_json::array();
        for (auto& [n, w] : failures) {
            nlohmann::ordered_json e;
            e["name"] = n;
            e["error"] = w;
            j["failures"].push_back(e);
        }
    }
    return j.dump(2);
}

}  // namespace hb
