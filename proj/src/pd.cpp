#include <cctype>
#include <map>

#include "hopfbracket/diagram.hpp"

namespace hb {

// PD text: "X[a,b,c,d];X[e,f,g,h];..." with edge labels 1..2c, labels listed
// counterclockwise starting at the incoming under-strand.  An empty code (or
// "U") is the 0-crossing unknot.
ArrowDiagram import_pd(const std::string& code) {
    ArrowDiagram d;
    std::vector<std::array<int, 4>> tuples;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < code.size() && (std::isspace(code[i]) || code[i] == ';')) ++i;
    };
    skip_ws();
    if (i >= code.size() || code == "U") {
        d.free_loops.push_back(FreeLoop{{}, Parent::root()});
        return d;
    }
    while (i < code.size()) {
        skip_ws();
        if (i >= code.size()) break;
        if (code[i] != 'X') throw DiagramError("MalformedPD", "expected X at position " + std::to_string(i));
        ++i;
        if (i >= code.size() || (code[i] != '[' && code[i] != '(')) throw DiagramError("MalformedPD", "expected [");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            size_t j = i;
            while (j < code.size() && std::isdigit(code[j])) ++j;
            if (j == i) throw DiagramError("MalformedPD", "expected label");
            t[size_t(k)] = std::stoi(code.substr(i, j - i));
            i = j;
            skip_ws();
            if (k < 3) {
                if (i >= code.size() || code[i] != ',') throw DiagramError("MalformedPD", "expected ,");
                ++i;
            }
        }
        if (i >= code.size() || (code[i] != ']' && code[i] != ')')) throw DiagramError("MalformedPD", "expected ]");
        ++i;
        tuples.push_back(t);
        skip_ws();
    }
    int n = int(tuples.size());
    int labels = 2 * n;
    std::map<int, std::vector<std::pair<int, int>>> uses;  // label -> [(crossing, slot)]
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            int l = tuples[size_t(c)][size_t(s)];
            if (l < 1 || l > labels) throw DiagramError("MalformedPD", "label out of range: " + std::to_string(l));
            uses[l].emplace_back(c, s);
        }
    for (int l = 1; l <= labels; ++l)
        if (uses[l].size() != 2)
            throw DiagramError("MalformedPD", "label " + std::to_string(l) + " used " +
                                                  std::to_string(uses[l].size()) + " times");

    // darts: crossing c slot s -> 4c + s; incoming under at slot 0 means the
    // under strand is the (0,2) pair, so the over pair is (1,3): over = 1
    for (int c = 0; c < n; ++c) {
        Crossing cr;
        for (int s = 0; s < 4; ++s) cr.darts[size_t(s)] = 4 * c + s;
        cr.over = 1;
        d.crossings.push_back(cr);
    }
    for (int l = 1; l <= labels; ++l) {
        Edge e;
        e.a = 4 * uses[l][0].first + uses[l][0].second;
        e.b = 4 * uses[l][1].first + uses[l][1].second;
        d.edges.push_back(e);
    }

    // orient edge 1 (labels increase along the strand): find its tail slot.
    // slot 0 = incoming under, slot 2 = outgoing under; over strand direction
    // per crossing: incoming over is the slot whose label + 1 (mod 2c) is the
    // label of the opposite slot.
    auto is_incoming = [&](int c, int s) {
        int l = tuples[size_t(c)][size_t(s)];
        int lo = tuples[size_t(c)][size_t((s + 2) % 4)];
        if (s == 0) return true;
        if (s == 2) return false;
        // over slots 1,3: incoming if the opposite (outgoing) label follows l
        int next = l % labels + 1;
        return lo == next;
    };
    Dart tail = -1;
    for (auto& [c, s] : uses[1])
        if (!is_incoming(c, s)) tail = 4 * c + s;
    if (tail < 0) tail = 4 * uses[1][0].first + uses[1][0].second;  // fallback (degenerate codes)

    d.comps.push_back(ComponentPos{tail, Parent::root()});
    auto rep = d.validate();
    if (!rep.ok) throw DiagramError("UnrealizableCode", rep.errors.front());
    // outer face: the face left of edge label 1 walking its direction
    d.comps[0].outward = d.face_rep(tail);
    d.normalize();
    return d;
}

}  // namespace hb
