#include <algorithm>
#include <functional>

#include "hopfbracket/torus.hpp"

namespace hb {

namespace {

// all perfect matchings of darts 0..4v-1 that give a connected planar map
// with the fixed rotation (crossing i owns darts 4i..4i+3 counterclockwise)
std::vector<ArrowDiagram> connected_shadows(int v) {
    std::vector<ArrowDiagram> out;
    std::set<std::string> seen;
    int n = 4 * v;
    std::vector<int> partner(size_t(n), -1);
    std::function<void()> rec = [&]() {
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (partner[size_t(i)] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            ArrowDiagram d;
            for (int i = 0; i < v; ++i) {
                Crossing c;
                for (int ss = 0; ss < 4; ++ss) c.darts[size_t(ss)] = 4 * i + ss;
                c.over = 0;
                d.crossings.push_back(c);
            }
            for (int i = 0; i < n; ++i)
                if (partner[size_t(i)] > i) {
                    Edge e;
                    e.a = i;
                    e.b = partner[size_t(i)];
                    d.edges.push_back(e);
                }
            d.comps.push_back(ComponentPos{0, Parent::root()});
            auto rep = d.validate();
            if (!rep.ok || rep.crossed_components != 1) return;
            d.comps[0].outward = d.face_rep(0);
            // dedup ignoring the outer choice: minimize canonical over faces
            std::string key;
            for (Dart f : d.all_face_reps()) {
                ArrowDiagram dd = d;
                dd.comps[0].outward = f;
                std::string cf = canonical_form(dd);
                if (key.empty() || cf < key) key = cf;
            }
            if (seen.insert(key).second) out.push_back(d);
            return;
        }
        for (int j = first + 1; j < n; ++j) {
            if (partner[size_t(j)] >= 0) continue;
            partner[size_t(first)] = j;
            partner[size_t(j)] = first;
            rec();
            partner[size_t(first)] = -1;
            partner[size_t(j)] = -1;
        }
    };
    rec();
    return out;
}

// rooted-forest shapes on m unlabeled loops, encoded as parent indexes
// (parent -1 = root region, otherwise an earlier loop)
void forest_shapes(int m, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int p = -1; p < i; ++p) {
            cur.push_back(p);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::set<CycloValue> enumerate_value_set(int c, int s, int k, const EnumerateOptions& opt) {
    if (k < 3) throw DiagramError("KTooSmall", "value sets need k >= 3");
    if (c > opt.max_crossings_guard || s > 3)
        throw DiagramError("BudgetExceeded",
                           "enumeration guard: c <= " + std::to_string(opt.max_crossings_guard) + ", s <= 3");
    std::set<CycloValue> values;
    std::set<std::string> eval_seen;

    auto add_all_orientations = [&](const ArrowDiagram& d) {
        std::string key = canonical_form(d);
        if (!eval_seen.insert(key).second) return;
        OrientedDiagram od = OrientedDiagram::canonical(d);
        int ns = int(od.flip_strand.size()), nl = int(od.flip_loop.size());
        int total = ns + nl;
        for (int mask = 0; mask < (1 << total); ++mask) {
            for (int i = 0; i < ns; ++i) od.flip_strand[size_t(i)] = (mask >> i) & 1;
            for (int i = 0; i < nl; ++i) od.flip_loop[size_t(i)] = (mask >> (ns + i)) & 1;
            values.insert(canonical_value(jones_at_root(od, k, opt.bracket), k));
        }
    };

    // pure loop forests
    for (int m = 1; m <= s; ++m) {
        std::vector<std::vector<int>> shapes;
        forest_shapes(m, shapes);
        for (auto& shape : shapes) {
            std::vector<int> nets(size_t(m), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == m) {
                    ArrowDiagram d;
                    for (int j = 0; j < m; ++j) {
                        FreeLoop l;
                        for (int t = 0; t < nets[size_t(j)]; ++t) l.arrows.push_back(+1);
                        l.parent = shape[size_t(j)] < 0 ? Parent::root() : Parent::loop(shape[size_t(j)]);
                        d.free_loops.push_back(l);
                    }
                    add_all_orientations(d);
                    return;
                }
                for (int net = 0; net < k; ++net) {
                    nets[size_t(i)] = net;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }

    // connected maps with extra nested loops
    for (int v = 1; v <= c; ++v) {
        auto shadows = connected_shadows(v);
        for (auto& sh : shadows) {
            int strands = int(sh.strands().size());
            if (strands > s) continue;
            int max_extra = s - strands;
            for (Dart outer : sh.all_face_reps()) {
                for (int overs = 0; overs < (1 << v); ++overs) {
                    ArrowDiagram base = sh;
                    base.comps[0].outward = outer;
                    for (int i = 0; i < v; ++i) base.crossings[size_t(i)].over = (overs >> i) & 1;
                    // arrow nets per edge
                    int ne = int(base.edges.size());
                    std::vector<int> nets(size_t(ne), 0);
                    std::function<void(int)> rec = [&](int i) {
                        if (i == ne) {
                            ArrowDiagram d = base;
                            for (int j = 0; j < ne; ++j)
                                for (int t = 0; t < nets[size_t(j)]; ++t)
                                    d.edges[size_t(j)].arrows.push_back(+1);
                            // optional extra loops in regions
                            std::function<void(ArrowDiagram&, int)> place = [&](ArrowDiagram& dd, int left) {
                                add_all_orientations(dd);
                                if (left == 0) return;
                                std::vector<Parent> spots;
                                spots.push_back(Parent::root());
                                Dart outw = dd.face_rep(dd.comps[0].outward);
                                for (Dart f : dd.all_face_reps())
                                    if (f != outw) spots.push_back(Parent::face(f));
                                for (size_t li = 0; li < dd.free_loops.size(); ++li)
                                    spots.push_back(Parent::loop(int(li)));
                                for (auto& sp : spots)
                                    for (int net = 0; net < k; ++net) {
                                        ArrowDiagram d2 = dd;
                                        FreeLoop l;
                                        for (int t = 0; t < net; ++t) l.arrows.push_back(+1);
                                        l.parent = sp;
                                        d2.free_loops.push_back(l);
                                        place(d2, left - 1);
                                    }
                            };
                            place(d, max_extra);
                            return;
                        }
                        for (int net = 0; net < k; ++net) {
                            nets[size_t(i)] = net;
                            rec(i + 1);
                        }
                    };
                    rec(0);
                }
            }
        }
    }
    return values;
}

}  // namespace hb
