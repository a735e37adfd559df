#pragma once

// Independent classical Kauffman bracket: plain delta^{loops-1} state sum
// with union-find loop counting.  No skein reduction, no region machinery;
// only the smoothing convention is shared with the engine.

#include <map>
#include <functional>
#include <numeric>
#include <vector>

#include "hopfbracket/bracket.hpp"
#include "hopfbracket/diagram.hpp"

namespace hb::oracle {

inline LaurentPoly classical_bracket(const ArrowDiagram& d) {
    if (d.arrow_total() != 0) throw std::runtime_error("classical oracle needs an arrowless diagram");
    int c = int(d.crossings.size());
    // dart -> dense index
    std::map<Dart, int> idx;
    for (auto& e : d.edges) {
        if (!idx.count(e.a)) idx[e.a] = int(idx.size());
        if (!idx.count(e.b)) idx[e.b] = int(idx.size());
    }
    int n = int(idx.size());
    LaurentPoly total;
    LaurentPoly delta = LaurentPoly::delta();
    for (uint64_t mask = 0; mask < (uint64_t(1) << c); ++mask) {
        std::vector<int> uf;
        uf.resize(size_t(n));
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) { return uf[size_t(x)] == x ? x : uf[size_t(x)] = find(uf[size_t(x)]); };
        auto unite = [&](int a, int b) { uf[size_t(find(a))] = find(b); };
        for (auto& e : d.edges) unite(idx[e.a], idx[e.b]);
        for (int i = 0; i < c; ++i) {
            const Crossing& cr = d.crossings[size_t(i)];
            int o = cr.over;
            auto dd = [&](int t) { return idx[cr.darts[size_t((o + t) % 4)]]; };
            if (((mask >> i) & 1) == 0) {
                unite(dd(1), dd(2));
                unite(dd(3), dd(0));
            } else {
                unite(dd(0), dd(1));
                unite(dd(2), dd(3));
            }
        }
        int loops = 0;
        for (int i = 0; i < n; ++i)
            if (find(i) == i) ++loops;
        loops += int(d.free_loops.size());
        int pc = __builtin_popcountll(mask);
        LaurentPoly term = LaurentPoly::a_power(c - 2 * pc);
        for (int i = 1; i < loops; ++i) term *= delta;
        total += term;
    }
    if (c == 0) {
        // no states: loops only
        total = LaurentPoly(Int(1));
        for (size_t i = 1; i < d.free_loops.size(); ++i) total *= delta;
    }
    return total;
}

inline TPoly classical_jones(const OrientedDiagram& od) {
    LaurentPoly br = classical_bracket(od.d);
    int w = writhe(od);
    br.shift((w % 2 == 0) ? Int(1) : Int(-1), -3 * w);
    return tpoly_of(br);
}

}  // namespace hb::oracle
