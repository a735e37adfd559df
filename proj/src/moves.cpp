#include "hopfbracket/moves.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace hb {

namespace {

using nlohmann::ordered_json;

// arrows of edge e viewed from dart x: list ordered from the x end, +1
// pointing away from x
std::vector<int> view_from(const Edge& e, Dart x) {
    std::vector<int> v = e.arrows;
    if (x == e.a) return v;
    std::reverse(v.begin(), v.end());
    for (auto& s : v) s = -s;
    return v;
}

// store a list viewed from dart x onto an edge with endpoints {x, y}
Edge make_edge(Dart x, Dart y, std::vector<int> viewed) {
    Edge e;
    e.a = x;
    e.b = y;
    e.arrows = std::move(viewed);
    return e;
}

Dart fresh_dart(const ArrowDiagram& d) {
    Dart m = 0;
    for (auto& e : d.edges) m = std::max({m, e.a + 1, e.b + 1});
    return m;
}

std::map<Dart, Dart> identity_map(const ArrowDiagram& d) {
    std::map<Dart, Dart> m;
    for (auto& e : d.edges) {
        m[e.a] = e.a;
        m[e.b] = e.b;
    }
    return m;
}

std::vector<int> identity_loop_map(const ArrowDiagram& d) {
    std::vector<int> m(d.free_loops.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = int(i);
    return m;
}

MoveResult start_result(const ArrowDiagram& d) {
    MoveResult r;
    r.d = d;
    r.dart_map = identity_map(d);
    r.loop_map = identity_loop_map(d);
    r.loop_drawn_flip.assign(d.free_loops.size(), false);
    return r;
}

void erase_loop(MoveResult& r, int loop) {
    r.d.free_loops.erase(r.d.free_loops.begin() + loop);
    for (auto& fl : r.d.free_loops)
        if (fl.parent.kind == Parent::Kind::Loop && fl.parent.ref > loop) --fl.parent.ref;
    for (auto& cp : r.d.comps)
        if (cp.parent.kind == Parent::Kind::Loop && cp.parent.ref > loop) --cp.parent.ref;
    for (auto& m : r.loop_map)
        if (m == loop)
            m = -1;
        else if (m > loop)
            --m;
}

// re-register component positions after structural changes; keeps entries
// for surviving components (matched by a representative dart), adds new ones
void rebuild_comps(ArrowDiagram& d, const std::vector<ComponentPos>& hints) {
    // hints: desired (outward, parent) keyed by any dart of the component
    std::vector<ComponentPos> fresh;
    std::set<int> claimed;
    auto comp_count = [&]() {
        std::set<int> ids;
        for (auto& e : d.edges) ids.insert(d.component_of_dart(e.a));
        return int(ids.size());
    };
    int n = d.edges.empty() ? 0 : comp_count();
    fresh.resize(size_t(n));
    std::vector<bool> have(size_t(n), false);
    for (auto& h : hints) {
        int ci = d.component_of_dart(h.outward);
        fresh[size_t(ci)] = h;
        have[size_t(ci)] = true;
        claimed.insert(ci);
    }
    for (int i = 0; i < n; ++i)
        if (!have[size_t(i)]) throw DiagramError("BadParent", "component lost its position record");
    d.comps = fresh;
}

}  // namespace

bool KindFilter::has(MoveSpec::Kind k) const {
    return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

// ---------------------------------------------------------------------------
// R1 positive: insert a kink at the u end of an edge, or on a free loop
// ---------------------------------------------------------------------------

namespace {

MoveResult apply_r1pos(const ArrowDiagram& d, const MoveSpec& m) {
    MoveResult r = start_result(d);
    Dart n0 = fresh_dart(d);
    Crossing X;
    X.darts = {n0, n0 + 1, n0 + 2, n0 + 3};
    X.over = m.over ? 1 : 0;
    int s = m.sign >= 0 ? 0 : 1;  // lobe side

    if (!m.a.is_loop) {
        Dart u = m.a.dart;
        int ei = d.edge_of(u);
        if (ei < 0) throw InvalidSite("R1+ needs an edge end");
        const Edge e = d.edges[size_t(ei)];
        Dart v = (e.a == u) ? e.b : e.a;
        std::vector<int> arr = view_from(e, u);
        r.d.edges.erase(r.d.edges.begin() + ei);
        // strand: u -> [kink] -> arrows -> v
        // s=0: lobe {n1,n2}, through u->n0, n3->v;  s=1: lobe {n2,n3}, through u->n0, n1->v
        r.d.edges.push_back(make_edge(u, n0, {}));
        if (s == 0) {
            r.d.edges.push_back(make_edge(n0 + 1, n0 + 2, {}));
            r.d.edges.push_back(make_edge(n0 + 3, v, arr));
        } else {
            r.d.edges.push_back(make_edge(n0 + 2, n0 + 3, {}));
            r.d.edges.push_back(make_edge(n0 + 1, v, arr));
        }
        r.d.crossings.push_back(X);
        r.d.normalize();
    } else {
        int li = m.a.loop;
        if (li < 0 || li >= int(d.free_loops.size())) throw InvalidSite("R1+ loop index");
        FreeLoop fl = d.free_loops[size_t(li)];
        // the loop closes up through the kink: big edge carries the arrows.
        // s=0: big edge {n0, n3}, lobe {n1, n2}; counterclockwise traversal of
        // the drawn circle runs from the n3 end to the n0 end.
        r.d.crossings.push_back(X);
        if (s == 0) {
            r.d.edges.push_back(make_edge(n0 + 3, n0, fl.arrows));
            r.d.edges.push_back(make_edge(n0 + 1, n0 + 2, {}));
        } else {
            r.d.edges.push_back(make_edge(n0 + 1, n0, fl.arrows));
            r.d.edges.push_back(make_edge(n0 + 2, n0 + 3, {}));
        }
        // outward face: the orbit of n0 ({n0, n2}); the singleton face is the
        // circle interior, the lobe pokes into the outer region
        ComponentPos cp;
        cp.outward = n0;
        cp.parent = fl.parent;
        // contents of the loop move to the interior face
        Dart interior = (s == 0) ? n0 + 3 : n0 + 1;
        for (size_t j = 0; j < r.d.free_loops.size(); ++j) {
            if (int(j) == li) continue;
            if (r.d.free_loops[j].parent == Parent::loop(li)) r.d.free_loops[j].parent = Parent::face(interior);
        }
        for (auto& c : r.d.comps)
            if (c.parent == Parent::loop(li)) c.parent = Parent::face(interior);
        r.d.comps.push_back(cp);
        // orientation witness: counterclockwise loop -> arrival at the big
        // edge's "from" end
        DirWitness oldw{true, -1, li, false};
        DirWitness neww{false, n0, -1, false};  // big edge runs (n3|n1) -> n0: arrival n0
        r.witnesses.emplace_back(oldw, neww);
        erase_loop(r, li);
        std::vector<ComponentPos> hints = r.d.comps;
        rebuild_comps(r.d, hints);
        r.d.normalize();
    }
    // kink sign is orientation independent
    {
        OrientedDiagram od = OrientedDiagram::canonical(r.d);
        std::set<Dart> arr;
        for (auto& st : r.d.strands())
            for (Dart x : st.arrivals) arr.insert(x);
        r.kink_sign = crossing_sign(r.d, r.d.crossings.back(), arr);
    }
    return r;
}

// R1 negative: remove an empty kink identified by its face dart
MoveResult apply_r1neg(const ArrowDiagram& d, const MoveSpec& m) {
    Dart x = m.a.dart;
    if (d.edge_of(x) < 0) throw InvalidSite("R1- dart");
    if (d.psi(x) != x) throw NotApplicable("not a kink face");
    int el = d.edge_of(x);
    const Edge lobe = d.edges[size_t(el)];
    if (!lobe.arrows.empty()) throw NotApplicable("kink lobe carries arrows");
    // lobe face must be empty
    for (auto& fl : d.free_loops)
        if (fl.parent.kind == Parent::Kind::Face && d.face_rep(fl.parent.ref) == d.face_rep(x))
            throw NotApplicable("kink lobe not empty");
    for (auto& cp : d.comps)
        if (cp.parent.kind == Parent::Kind::Face && d.face_rep(cp.parent.ref) == d.face_rep(x))
            throw NotApplicable("kink lobe not empty");

    int ci = d.crossing_of(x);
    const Crossing c = d.crossings[size_t(ci)];
    Dart sx = d.sigma(x);
    Dart p = d.sigma(sx), q = d.sigma(p);  // through darts
    int ep = d.edge_of(p), eq = d.edge_of(q);

    MoveResult r = start_result(d);
    int compi = d.component_of_dart(x);
    ComponentPos cpos = d.comps[size_t(compi)];

    if (ep != eq) {
        Dart y = d.alpha(p), z = d.alpha(q);
        std::vector<int> va = view_from(d.edges[size_t(eq)], z);          // z -> q
        std::vector<int> vb = view_from(d.edges[size_t(ep)], p);          // p -> y
        std::vector<int> merged = va;
        merged.insert(merged.end(), vb.begin(), vb.end());
        // delete edges lobe, ep, eq; add {z, y}
        std::vector<int> dead = {el, ep, eq};
        std::sort(dead.rbegin(), dead.rend());
        for (int e : dead) r.d.edges.erase(r.d.edges.begin() + e);
        r.d.edges.push_back(make_edge(z, y, merged));
        r.d.crossings.erase(r.d.crossings.begin() + ci);
        for (Dart dd : {x, sx, p, q}) r.dart_map.erase(dd);
        // faces adjacent to the through strand on the lobe side merge; remap
        // any parent reference to a dead dart onto a survivor
        auto old_face_survivor = [&](Dart f) -> Dart {
            for (Dart dd : d.face_orbit(f)) {
                if (dd == x || dd == sx || dd == p || dd == q) continue;
                return dd;
            }
            // merged with the neighbour faces across the removed kink
            for (Dart seed : {d.sigma_inv(x), sx, q}) {
                for (Dart dd : d.face_orbit(seed))
                    if (dd != x && dd != sx && dd != p && dd != q) return dd;
            }
            throw DiagramError("BadParent", "no surviving face dart after R1-");
        };
        auto fix = [&](Parent& pr) {
            if (pr.kind != Parent::Kind::Face) return;
            if (r.dart_map.count(pr.ref)) return;
            pr = Parent::face(old_face_survivor(pr.ref));
        };
        for (auto& fl : r.d.free_loops) fix(fl.parent);
        std::vector<ComponentPos> hints;
        for (auto& cp : d.comps) {
            ComponentPos h = cp;
            fix(h.parent);
            if (!r.dart_map.count(h.outward)) h.outward = old_face_survivor(h.outward);
            // keep a live dart of the right component
            hints.push_back(h);
        }
        rebuild_comps(r.d, hints);
        r.d.normalize();
        r.d.require_valid("R1-");
        return r;
    }

    // closure: the component was a single kinked circle; it becomes a loop
    const Edge big = d.edges[size_t(ep)];
    // interior face: the side of the big edge away from the outward face
    Dart f_p = d.face_rep(p), f_q = d.face_rep(q);
    Dart outw = d.face_rep(cpos.outward);
    Dart interior;
    Dart ccw_view;  // view the arrows from this dart for a counterclockwise list
    if (outw == f_p) {
        interior = f_q;
        ccw_view = q;
    } else if (outw == f_q) {
        interior = f_p;
        ccw_view = p;
    } else {
        // outward is the lobe face's neighbour; the kink pointed outward:
        // both big-edge sides are interior-ish -- the merged side faces root
        interior = (f_p == d.face_rep(x)) ? f_q : f_p;
        ccw_view = (interior == f_p) ? p : q;
    }
    FreeLoop nl;
    nl.arrows = view_from(big, ccw_view);
    nl.parent = cpos.parent;
    int new_loop = int(r.d.free_loops.size());
    r.d.free_loops.push_back(nl);
    // contents of the interior face now live in the loop; contents of the
    // other faces join the enclosing region
    for (auto& fl : r.d.free_loops) {
        if (fl.parent.kind != Parent::Kind::Face) continue;
        if (d.component_of_dart(fl.parent.ref) != compi) continue;
        fl.parent = (d.face_rep(fl.parent.ref) == interior) ? Parent::loop(new_loop) : cpos.parent;
    }
    std::vector<ComponentPos> hints;
    for (size_t i = 0; i < d.comps.size(); ++i) {
        if (int(i) == compi) continue;
        ComponentPos h = d.comps[i];
        if (h.parent.kind == Parent::Kind::Face && d.component_of_dart(h.parent.ref) == compi)
            h.parent = (d.face_rep(h.parent.ref) == interior) ? Parent::loop(new_loop) : cpos.parent;
        hints.push_back(h);
    }
    r.d.crossings.erase(r.d.crossings.begin() + ci);
    std::vector<int> dead = {el, ep};
    std::sort(dead.rbegin(), dead.rend());
    for (int e : dead) r.d.edges.erase(r.d.edges.begin() + e);
    for (Dart dd : {x, sx, p, q}) r.dart_map.erase(dd);
    rebuild_comps(r.d, hints);
    // orientation: traversal arriving at ccw_view ran counterclockwise
    DirWitness oldw{false, ccw_view, -1, false};
    DirWitness neww{true, -1, new_loop, false};
    r.witnesses.emplace_back(oldw, neww);
    r.d.normalize();
    r.d.require_valid("R1- closure");
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// R2 positive: push a finger from one region side across another
// ---------------------------------------------------------------------------

namespace {

struct SideInfo {
    bool is_loop;
    int loop = -1;
    Dart dart = -1;  // walking dart with the region on its left
};

ArrowDiagram::Region site_region(const ArrowDiagram& d, const Site& s) {
    if (s.is_loop) return d.loop_region(s.loop, s.inside);
    return d.side_region(s.dart);
}

// One layout variant of the finger push.  The rails cross the target strand
// at c1 and c2; `swap_rails` selects which rail crosses nearer the site dart
// of the target (the two choices are mirror routings; exactly one of them is
// planar for a given pair of boundary passages).
MoveResult build_r2pos(const ArrowDiagram& d, const MoveSpec& m, bool swap_rails) {
    auto ra = site_region(d, m.a), rb = site_region(d, m.b);
    MoveResult r = start_result(d);
    Dart n = fresh_dart(d);
    // c1 darts [a0,a1,a2,a3]: a0 rail toward pusher, a2 rail toward tip,
    //                          a1/a3 target strand
    // c2 darts [b0,b1,b2,b3]: b0 rail toward tip, b2 rail back to pusher,
    //                          b1/b3 target strand
    Dart a0 = n, a1 = n + 1, a2 = n + 2, a3 = n + 3;
    Dart b0 = n + 4, b1 = n + 5, b2 = n + 6, b3 = n + 7;
    Crossing c1{{a0, a1, a2, a3}, m.over ? 1 : 0};
    Crossing c2{{b0, b1, b2, b3}, m.over ? 1 : 0};
    // target-side dart roles per variant:
    //   near  = dart adjacent to the target's site dart end
    //   mid1/mid2 = the short middle segment, far = continues to the far end
    Dart near_d = swap_rails ? b3 : a1;
    Dart mid_c1 = swap_rails ? a1 : a3;
    Dart mid_c2 = swap_rails ? b1 : b3;
    Dart far_d = swap_rails ? a3 : b1;

    std::vector<int> dead_edges;
    int pusher_loop = -1, target_loop = -1;
    if (m.a.is_loop) {
        pusher_loop = m.a.loop;
        const FreeLoop& fl = d.free_loops[size_t(pusher_loop)];
        std::vector<int> arr = fl.arrows;
        if (m.a.inside) {
            std::reverse(arr.begin(), arr.end());
            for (auto& s : arr) s = -s;
        }
        r.d.edges.push_back(make_edge(b2, a0, arr));
        DirWitness oldw{true, -1, pusher_loop, false};
        DirWitness neww{false, m.a.inside ? b2 : a0, -1, false};
        r.witnesses.emplace_back(oldw, neww);
    } else {
        Dart u = m.a.dart;
        int ei = d.edge_of(u);
        const Edge e = d.edges[size_t(ei)];
        Dart u2 = (e.a == u) ? e.b : e.a;
        std::vector<int> arr = view_from(e, u);
        dead_edges.push_back(ei);
        r.d.edges.push_back(make_edge(u, a0, {}));
        r.d.edges.push_back(make_edge(b2, u2, arr));
    }
    if (m.b.is_loop) {
        target_loop = m.b.loop;
        const FreeLoop& fl = d.free_loops[size_t(target_loop)];
        std::vector<int> arr = fl.arrows;
        if (m.b.inside) {
            std::reverse(arr.begin(), arr.end());
            for (auto& s : arr) s = -s;
        }
        // long arc {near -> around -> far} carries the arrows
        r.d.edges.push_back(make_edge(near_d, far_d, arr));
        r.d.edges.push_back(make_edge(mid_c1, mid_c2, {}));
        DirWitness oldw{true, -1, target_loop, false};
        DirWitness neww{false, m.b.inside ? near_d : far_d, -1, false};
        r.witnesses.emplace_back(oldw, neww);
    } else {
        Dart v = m.b.dart;
        int ei = d.edge_of(v);
        const Edge e = d.edges[size_t(ei)];
        Dart v2 = (e.a == v) ? e.b : e.a;
        std::vector<int> arr = view_from(e, v);
        if (std::find(dead_edges.begin(), dead_edges.end(), ei) != dead_edges.end()) {
            // pusher and target ends of the same edge
            r.d.edges.pop_back();  // remove {b2, u2}
            std::vector<int> full = view_from(e, m.a.dart);
            r.d.edges.push_back(make_edge(b2, far_d, full));
            r.d.edges.push_back(make_edge(mid_c1, mid_c2, {}));
            r.d.edges.push_back(make_edge(v, near_d, {}));
        } else {
            dead_edges.push_back(ei);
            r.d.edges.push_back(make_edge(v, near_d, {}));
            r.d.edges.push_back(make_edge(mid_c1, mid_c2, {}));
            r.d.edges.push_back(make_edge(far_d, v2, arr));
        }
    }
    r.d.edges.push_back(make_edge(a2, b0, {}));  // tip
    std::sort(dead_edges.rbegin(), dead_edges.rend());
    for (int ei : dead_edges) r.d.edges.erase(r.d.edges.begin() + ei);
    r.d.crossings.push_back(c1);
    r.d.crossings.push_back(c2);

    // containment: the left side of the walking dart `near_d` (resp. of the
    // pusher arc dart toward a0) is the side of the dissolved circle away
    // from the region being crossed
    Parent target_inner = Parent::face(m.b.inside ? far_d : near_d);   // the former inside
    Parent target_outer = Parent::face(m.b.inside ? near_d : far_d);   // the former outside
    Parent pusher_inner = Parent::face(m.a.inside ? b2 : a0);
    Parent pusher_outer = Parent::face(m.a.inside ? a0 : b2);
    if (target_loop >= 0) {
        for (auto& fl : r.d.free_loops)
            if (fl.parent == Parent::loop(target_loop)) fl.parent = target_inner;
        for (auto& cp : r.d.comps)
            if (cp.parent == Parent::loop(target_loop)) cp.parent = target_inner;
    }
    if (pusher_loop >= 0) {
        for (auto& fl : r.d.free_loops)
            if (fl.parent == Parent::loop(pusher_loop)) fl.parent = pusher_inner;
        for (auto& cp : r.d.comps)
            if (cp.parent == Parent::loop(pusher_loop)) cp.parent = pusher_inner;
    }

    std::vector<ComponentPos> hints;
    // position of the merged component when a dissolved loop enclosed the
    // other side: it takes over the dissolved loop's place in the forest
    auto loop_parent_resolved = [&](int li) {
        Parent p = d.free_loops[size_t(li)].parent;
        if (p.kind == Parent::Kind::Loop) {
            if (p.ref == pusher_loop) return pusher_inner;
            if (p.ref == target_loop) return target_inner;
            if (r.loop_map[size_t(p.ref)] >= 0) return Parent::loop(r.loop_map[size_t(p.ref)]);
        }
        return p;
    };
    for (auto& cp : d.comps) {
        ComponentPos h = cp;
        bool is_pusher_comp = !m.a.is_loop && d.component_of_dart(m.a.dart) == (&cp - d.comps.data());
        bool is_target_comp = !m.b.is_loop && d.component_of_dart(m.b.dart) == (&cp - d.comps.data());
        if (is_pusher_comp && target_loop >= 0 && cp.parent == Parent::loop(target_loop)) {
            // pushed from inside the loop across it: the merged component
            // takes the loop's position, outward on the loop's former outside
            h.parent = loop_parent_resolved(target_loop);
            h.outward = target_outer.ref;
        } else if (is_target_comp && pusher_loop >= 0 && cp.parent == Parent::loop(pusher_loop)) {
            h.parent = loop_parent_resolved(pusher_loop);
            h.outward = pusher_outer.ref;
        } else if (h.parent.kind == Parent::Kind::Loop) {
            int old = h.parent.ref;
            if (old == pusher_loop)
                h.parent = pusher_inner;
            else if (old == target_loop)
                h.parent = target_inner;
            else if (r.loop_map[size_t(old)] >= 0)
                h.parent = Parent::loop(r.loop_map[size_t(old)]);
        }
        hints.push_back(h);
    }
    if (pusher_loop >= 0 && target_loop >= 0) {
        // brand-new component from two loops; its position comes from the
        // outermost dissolved loop
        ComponentPos cp;
        bool pusher_inside_target = (d.free_loops[size_t(pusher_loop)].parent == Parent::loop(target_loop));
        bool target_inside_pusher = (d.free_loops[size_t(target_loop)].parent == Parent::loop(pusher_loop));
        if (pusher_inside_target) {
            cp.parent = loop_parent_resolved(target_loop);
            cp.outward = target_outer.ref;
        } else if (target_inside_pusher) {
            cp.parent = loop_parent_resolved(pusher_loop);
            cp.outward = pusher_outer.ref;
        } else {
            // siblings in a shared region
            cp.parent = d.parent_for_region(ra);
            if (cp.parent.kind == Parent::Kind::Loop) {
                int old = cp.parent.ref;
                if (r.loop_map[size_t(old)] >= 0) cp.parent = Parent::loop(r.loop_map[size_t(old)]);
            }
            cp.outward = -1;  // probed below
        }
        hints.push_back(cp);
    }
    (void)rb;
    for (int li : {std::max(pusher_loop, target_loop), std::min(pusher_loop, target_loop)})
        if (li >= 0) erase_loop(r, li);

    if (pusher_loop >= 0 && target_loop >= 0) {
        // sibling case: outward face of the fresh component is the face that
        // was the shared region: not an inner side, not the rail bigon
        std::set<Dart> inner_reps;
        inner_reps.insert(r.d.face_rep(pusher_inner.ref));
        inner_reps.insert(r.d.face_rep(target_inner.ref));
        Dart outw = -1;
        for (Dart cand : {a0, b2, a2, a1, a3, b1, b3, b0}) {
            Dart f = r.d.face_rep(cand);
            if (inner_reps.count(f)) continue;
            auto orb = r.d.face_orbit(f);
            if (orb.size() == 2) continue;  // the bigon between tip and middle
            outw = f;
            break;
        }
        if (outw < 0) outw = r.d.face_rep(a0);
        for (auto& h : hints)
            if (h.outward < 0) h.outward = outw;
    }
    rebuild_comps(r.d, hints);
    r.d.normalize();
    r.d.require_valid("R2+");
    return r;
}

MoveResult apply_r2pos(const ArrowDiagram& d, const MoveSpec& m) {
    if (m.a == m.b) throw InvalidSite("R2+ needs two distinct sides");
    auto ra = site_region(d, m.a), rb = site_region(d, m.b);
    if (!(ra == rb)) throw NotApplicable("sides do not share a region");
    if (!m.a.is_loop && !m.b.is_loop && m.a.dart == m.b.dart)
        throw InvalidSite("R2+ from an edge end across itself");
    try {
        return build_r2pos(d, m, false);
    } catch (const DiagramError&) {
        return build_r2pos(d, m, true);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// R2 negative
// ---------------------------------------------------------------------------

namespace {

// splice chains through dead crossings; returns new edges and closed loops
struct SpliceOut {
    std::vector<Edge> new_edges;
    struct Closed {
        std::vector<int> arrows;    // viewed along the walk
        std::vector<Dart> walk;     // the walking darts visited (old diagram)
    };
    std::vector<Closed> closed;
};

SpliceOut splice_dead(const ArrowDiagram& d, const std::set<int>& dead_cross,
                      const std::set<int>& dead_edges_extra) {
    auto is_dead_c = [&](Dart x) {
        int ci = d.crossing_of(x);
        return dead_cross.count(ci) > 0;
    };
    SpliceOut out;
    std::set<int> visited_edges;
    for (size_t ei = 0; ei < d.edges.size(); ++ei) {
        if (dead_edges_extra.count(int(ei))) visited_edges.insert(int(ei));
    }
    for (size_t e0 = 0; e0 < d.edges.size(); ++e0) {
        if (visited_edges.count(int(e0))) continue;
        const Edge& e = d.edges[e0];
        bool a_dead = is_dead_c(e.a), b_dead = is_dead_c(e.b);
        if (!a_dead && !b_dead) continue;  // untouched edge
        // find a live starting end if there is one
        Dart start = -1;
        if (!a_dead)
            start = e.a;
        else if (!b_dead)
            start = e.b;
        if (start >= 0) {
            // walk from the live end through dead crossings to another live end
            std::vector<int> arrows;
            Dart cur = start;
            int cur_edge = int(e0);
            while (true) {
                visited_edges.insert(cur_edge);
                auto v = view_from(d.edges[size_t(cur_edge)], cur);
                arrows.insert(arrows.end(), v.begin(), v.end());
                Dart far = (d.edges[size_t(cur_edge)].a == cur) ? d.edges[size_t(cur_edge)].b
                                                                : d.edges[size_t(cur_edge)].a;
                if (!is_dead_c(far)) {
                    out.new_edges.push_back(make_edge(start, far, arrows));
                    break;
                }
                Dart nxt = d.opposite(far);
                cur = nxt;
                cur_edge = d.edge_of(nxt);
            }
        } else {
            // both ends dead: may be part of a chain reachable from a live
            // end (handled above) or a fully closed chain; check closure
            // by walking and recording
            std::vector<int> arrows;
            std::vector<Dart> walk;
            Dart cur = e.a;
            int cur_edge = int(e0);
            bool closed = true;
            std::set<int> local;
            while (true) {
                if (local.count(cur_edge)) break;
                local.insert(cur_edge);
                walk.push_back(cur);
                auto v = view_from(d.edges[size_t(cur_edge)], cur);
                arrows.insert(arrows.end(), v.begin(), v.end());
                Dart far = (d.edges[size_t(cur_edge)].a == cur) ? d.edges[size_t(cur_edge)].b
                                                                : d.edges[size_t(cur_edge)].a;
                if (!is_dead_c(far)) {
                    closed = false;
                    break;
                }
                cur = d.opposite(far);
                cur_edge = d.edge_of(cur);
            }
            if (!closed) continue;  // reachable from a live end; skip here
            bool already = false;
            for (auto& c : out.closed)
                for (Dart w : c.walk)
                    if (d.edge_of(w) == int(e0)) already = true;
            if (already) continue;
            for (int le : local) visited_edges.insert(le);
            SpliceOut::Closed cl;
            cl.arrows = arrows;
            cl.walk = walk;
            out.closed.push_back(cl);
        }
    }
    return out;
}

MoveResult apply_r2neg(const ArrowDiagram& d, const MoveSpec& m) {
    Dart x = m.a.dart;
    if (d.edge_of(x) < 0) throw InvalidSite("R2- dart");
    Dart y = d.psi(x);
    if (y == x || d.psi(y) != x) throw NotApplicable("not a bigon face");
    int cx = d.crossing_of(x), cy = d.crossing_of(y);
    if (cx == cy) throw NotApplicable("bigon at a single crossing");
    Dart sx = d.sigma(x), sy = d.sigma(y);
    int e1 = d.edge_of(sx), e2 = d.edge_of(sy);
    if (!d.edges[size_t(e1)].arrows.empty() || !d.edges[size_t(e2)].arrows.empty())
        throw NotApplicable("bigon edges carry arrows");
    if (d.dart_on_over_strand(sx) != d.dart_on_over_strand(y))
        throw NotApplicable("bigon over/under pattern does not match");
    // bigon face must be empty
    Dart brep = d.face_rep(x);
    for (auto& fl : d.free_loops)
        if (fl.parent.kind == Parent::Kind::Face && d.face_rep(fl.parent.ref) == brep)
            throw NotApplicable("bigon face not empty");
    for (auto& cp : d.comps)
        if (cp.parent.kind == Parent::Kind::Face && d.face_rep(cp.parent.ref) == brep)
            throw NotApplicable("bigon face not empty");

    int compi = d.component_of_dart(x);
    ComponentPos cpos = d.comps[size_t(compi)];
    std::set<int> dead{cx, cy};
    std::set<Dart> dead_darts;
    for (int ci : dead)
        for (Dart dd : d.crossings[size_t(ci)].darts) dead_darts.insert(dd);

    SpliceOut sp = splice_dead(d, dead, {});
    MoveResult r = start_result(d);
    // remove dead crossings and all edges touching them
    std::vector<int> del_e;
    for (size_t ei = 0; ei < d.edges.size(); ++ei)
        if (dead_darts.count(d.edges[ei].a) || dead_darts.count(d.edges[ei].b)) del_e.push_back(int(ei));
    std::sort(del_e.rbegin(), del_e.rend());
    for (int ei : del_e) r.d.edges.erase(r.d.edges.begin() + ei);
    std::vector<int> del_c(dead.begin(), dead.end());
    std::sort(del_c.rbegin(), del_c.rend());
    for (int ci : del_c) r.d.crossings.erase(r.d.crossings.begin() + ci);
    for (Dart dd : dead_darts) r.dart_map.erase(dd);
    for (auto& e : sp.new_edges) r.d.edges.push_back(e);

    // merged region: bigon + the two end corners
    std::set<Dart> merged_faces{brep, d.face_rep(d.sigma(sx)), d.face_rep(d.sigma(sy))};
    auto face_survivor = [&](Dart f) -> Dart {
        for (Dart dd : d.face_orbit(f))
            if (!dead_darts.count(dd)) return dd;
        return -1;
    };
    // the merged region's surviving rep: any survivor of the three faces;
    // if none survives the merged region dissolves into the enclosing one
    Dart msurv = -1;
    for (Dart f : merged_faces) {
        Dart s = face_survivor(f);
        if (s >= 0) {
            msurv = s;
            break;
        }
    }
    bool outward_merged = merged_faces.count(d.face_rep(cpos.outward)) > 0;

    auto fix_parent = [&](Parent& p) {
        if (p.kind != Parent::Kind::Face) return;
        Dart f = d.face_rep(p.ref);
        if (merged_faces.count(f)) {
            if (outward_merged)
                p = cpos.parent;
            else if (msurv >= 0)
                p = Parent::face(msurv);
            else
                p = cpos.parent;
            return;
        }
        Dart s = face_survivor(f);
        if (s >= 0) {
            p = Parent::face(s);
            return;
        }
        // face with no surviving dart: becomes the inside of a closed chain
        for (size_t k = 0; k < sp.closed.size(); ++k) {
            // the chain bounds it if one of the face's darts walks the chain
            for (Dart w : sp.closed[k].walk) {
                for (Dart fd : d.face_orbit(f))
                    if (d.edge_of(fd) == d.edge_of(w)) {
                        p = Parent::loop(int(r.d.free_loops.size() + k));
                        return;
                    }
            }
        }
        throw DiagramError("BadParent", "lost face in R2-");
    };

    for (auto& fl : r.d.free_loops) fix_parent(fl.parent);

    // closed chains become free loops; orientation: interior on the left
    std::vector<int> new_loops;
    for (auto& cl : sp.closed) {
        FreeLoop nl;
        // decide drawn orientation: the walk's left faces; the left side is
        // the interior iff the left face is not on the path to the root
        Dart w0 = cl.walk.front();
        Dart lf = d.face_rep(w0);
        bool left_is_interior;
        if (merged_faces.count(lf))
            left_is_interior = false;  // merged side faces the enclosing region
        else {
            // interior iff that face dies with the chain or stays bounded by it
            left_is_interior = true;
            if (d.face_rep(cpos.outward) == lf) left_is_interior = false;
        }
        nl.arrows = cl.arrows;
        if (!left_is_interior) {
            std::reverse(nl.arrows.begin(), nl.arrows.end());
            for (auto& s : nl.arrows) s = -s;
        }
        nl.parent = cpos.parent;
        new_loops.push_back(int(r.d.free_loops.size()));
        r.d.free_loops.push_back(nl);
        DirWitness oldw{false, d.alpha(w0), -1, false};  // arrival at far end of first edge
        DirWitness neww{true, -1, new_loops.back(), !left_is_interior};
        r.witnesses.emplace_back(oldw, neww);
    }

    std::vector<ComponentPos> hints;
    for (size_t i = 0; i < d.comps.size(); ++i) {
        ComponentPos h = d.comps[i];
        fix_parent(h.parent);
        if (int(i) == compi) {
            // component may have died or lost its outward dart
            bool alive = false;
            for (auto& e : r.d.edges)
                if (r.dart_map.count(e.a)) {
                    alive = true;
                    break;
                }
            if (r.d.edges.empty() || !alive) continue;
            if (!r.dart_map.count(h.outward) || outward_merged) {
                Dart s = outward_merged ? msurv : face_survivor(d.face_rep(h.outward));
                if (s < 0) {
                    // outward face dissolved; fall back to any surviving dart
                    // of this component bordering the enclosing region
                    continue;
                }
                h.outward = s;
            }
            hints.push_back(h);
        } else {
            hints.push_back(h);
        }
    }
    if (!r.d.edges.empty() && hints.empty())
        throw NotApplicable("unsupported degenerate bigon removal");
    // component may have split: every surviving component needs a record
    try {
        rebuild_comps(r.d, hints);
    } catch (const DiagramError&) {
        throw NotApplicable("unsupported degenerate bigon removal (split)");
    }
    r.d.normalize();
    r.d.require_valid("R2-");
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// R3
// ---------------------------------------------------------------------------

namespace {

MoveResult apply_r3(const ArrowDiagram& d, const MoveSpec& m) {
    Dart x0 = m.a.dart;
    if (d.edge_of(x0) < 0) throw InvalidSite("R3 dart");
    Dart y0 = d.psi(x0), z0 = d.psi(y0);
    if (d.psi(z0) != x0 || y0 == x0 || z0 == x0) throw NotApplicable("not a triangle face");
    // rotate so that `mover` selects which triangle edge slides
    std::array<Dart, 3> xyz{x0, y0, z0};
    std::rotate(xyz.begin(), xyz.begin() + (m.mover % 3), xyz.end());
    Dart x = xyz[0], y = xyz[1], z = xyz[2];
    int cx = d.crossing_of(x), cy = d.crossing_of(y), cz = d.crossing_of(z);
    if (cx == cy || cy == cz || cx == cz) throw NotApplicable("triangle with repeated crossings");
    Dart sx = d.sigma(x), sy = d.sigma(y), sz = d.sigma(z);
    // triangle edges E1={sx,y} (slides across cz), E2={sy,z}, E3={sz,x}
    for (Dart t : {sx, sy, sz})
        if (!d.edges[size_t(d.edge_of(t))].arrows.empty())
            throw NotApplicable("triangle edges carry arrows");
    if (d.dart_on_over_strand(sx) != d.dart_on_over_strand(y))
        throw NotApplicable("sliding strand is not consistently over/under");
    Dart trep = d.face_rep(x);
    for (auto& fl : d.free_loops)
        if (fl.parent.kind == Parent::Kind::Face && d.face_rep(fl.parent.ref) == trep)
            throw NotApplicable("triangle face not empty");
    for (auto& cp : d.comps)
        if (cp.parent.kind == Parent::Kind::Face && d.face_rep(cp.parent.ref) == trep)
            throw NotApplicable("triangle face not empty");

    // re-pair six darts:
    //   E3' = {s2x, s3z},  L-under outer: {sz, oL}, L-over outer: {x, oL'}
    //   E2' = {s3y, s2z},  R outer: {z, oR}, {sy, oR'}
    Dart s2x = d.sigma(sx), s3z = d.sigma(d.sigma(sz));
    Dart s3y = d.sigma(d.sigma(sy)), s2z = d.sigma(sz);
    Dart oL = d.alpha(s2x), oLp = d.alpha(s3z);
    Dart oR = d.alpha(s3y), oRp = d.alpha(s2z);

    MoveResult r = start_result(d);
    // partner reassignment, arrows travel with the retained outer end
    auto reattach = [&](Dart from, Dart to) {
        // edge that had endpoint `from` now ends at `to`
        for (auto& e : r.d.edges) {
            if (e.a == from) {
                e.a = to;
                return;
            }
            if (e.b == from) {
                e.b = to;
                return;
            }
        }
        throw std::logic_error("R3 reattach: edge not found");
    };
    // remove the two triangle edges E3, E2 first; E1 is untouched
    std::vector<int> del{d.edge_of(sz), d.edge_of(sy)};
    std::sort(del.rbegin(), del.rend());
    for (int ei : del) r.d.edges.erase(r.d.edges.begin() + ei);
    // outer edges re-target
    if (oL == s3z && oLp == s2x) {
        // L-outer was a single edge {s2x, s3z}: it becomes E3'' = {sz, x}
        reattach(s2x, sz);
        reattach(s3z, x);
    } else {
        reattach(s2x, sz);   // {s2x, oL} -> {sz, oL}
        reattach(s3z, x);    // {s3z, oL'} -> {x, oL'}
        r.d.edges.push_back(make_edge(s2x, s3z, {}));
    }
    if (oR == s2z && oRp == s3y) {
        reattach(s3y, z);
        reattach(s2z, sy);
    } else {
        reattach(s3y, z);    // {s3y, oR} -> {z, oR}
        reattach(s2z, sy);   // {s2z, oR'} -> {sy, oR'}
        r.d.edges.push_back(make_edge(s3y, s2z, {}));
    }
    r.d.normalize();
    std::vector<ComponentPos> hints = d.comps;
    for (auto& h : hints) {
        if (h.parent.kind == Parent::Kind::Face) h.parent = Parent::face(h.parent.ref);
    }
    rebuild_comps(r.d, hints);
    r.d.normalize();
    r.d.require_valid("R3");
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// arrow moves: R4, R5, KMove, Rinf
// ---------------------------------------------------------------------------

namespace {

std::vector<int>& arrow_list(ArrowDiagram& d, const MoveSpec& m) {
    if (m.edge >= 0) {
        if (m.edge >= int(d.edges.size())) throw InvalidSite("edge index");
        return d.edges[size_t(m.edge)].arrows;
    }
    if (m.loop < 0 || m.loop >= int(d.free_loops.size())) throw InvalidSite("loop index");
    return d.free_loops[size_t(m.loop)].arrows;
}

bool list_is_loop(const MoveSpec& m) { return m.edge < 0; }

MoveResult apply_r4(const ArrowDiagram& d, const MoveSpec& m) {
    MoveResult r = start_result(d);
    auto& arr = arrow_list(r.d, m);
    int n = int(arr.size());
    bool cyc = list_is_loop(m);
    auto at = [&](int i) -> int& { return arr[size_t(((i % n) + n) % n)]; };
    if (m.kind == MoveSpec::Kind::R4Insert) {
        if (m.pos < 0 || m.pos > n) throw InvalidSite("R4 insert position");
        arr.insert(arr.begin() + m.pos, {m.sign, -m.sign});
        return r;
    }
    if (n < 2) throw NotApplicable("fewer than two arrows");
    int i = m.pos, j = cyc ? (m.pos + 1) % n : m.pos + 1;
    if (i < 0 || i >= n || j >= n || (!cyc && j > n - 1)) throw InvalidSite("R4 position");
    if (at(i) != -at(j)) throw NotApplicable("arrows are not opposite");
    if (m.kind == MoveSpec::Kind::R4Slide) {
        std::swap(at(i), at(j));
        return r;
    }
    // cancel
    if (j > i) {
        arr.erase(arr.begin() + j);
        arr.erase(arr.begin() + i);
    } else {  // wrapped
        arr.erase(arr.begin() + i);
        arr.erase(arr.begin() + j);
    }
    return r;
}

MoveResult apply_kmove(const ArrowDiagram& d, const MoveSpec& m) {
    if (m.k < 1) throw InvalidSite("k must be positive");
    MoveResult r = start_result(d);
    auto& arr = arrow_list(r.d, m);
    if (m.insert) {
        if (m.pos < 0 || m.pos > int(arr.size())) throw InvalidSite("KMove position");
        arr.insert(arr.begin() + m.pos, size_t(m.k), m.sign);
    } else {
        int n = int(arr.size());
        if (n < m.k) throw NotApplicable("not enough arrows");
        bool cyc = list_is_loop(m);
        if (m.pos < 0 || m.pos >= n) throw InvalidSite("KMove position");
        for (int t = 0; t < m.k; ++t) {
            int idx = cyc ? (m.pos + t) % n : m.pos + t;
            if (idx >= n) throw NotApplicable("run extends past the edge end");
            if (arr[size_t(idx)] != m.sign) throw NotApplicable("run is not same-direction");
        }
        // delete the k entries
        std::vector<int> keep;
        std::set<int> drop;
        for (int t = 0; t < m.k; ++t) drop.insert(cyc ? (m.pos + t) % n : m.pos + t);
        for (int t = 0; t < n; ++t)
            if (!drop.count(t)) keep.push_back(arr[size_t(t)]);
        arr = keep;
    }
    return r;
}

MoveResult apply_r5(const ArrowDiagram& d, const MoveSpec& m) {
    Dart x = m.a.dart;
    int ci = d.crossing_of(x);
    if (ci < 0) throw InvalidSite("R5 dart not at a crossing");
    int ei = d.edge_of(x);
    const Edge& e = d.edges[size_t(ei)];
    auto varr = view_from(e, x);
    bool strand_over = d.dart_on_over_strand(x);
    bool fwd;  // arrow at the x end pointing away from the crossing, strand over
    if (!varr.empty() && varr.front() == +1 && strand_over)
        fwd = true;
    else if (!varr.empty() && varr.front() == -1 && !strand_over)
        fwd = false;  // arrow pointing toward crossing, strand under: inverse pattern
    else
        throw NotApplicable("no matching arrow/crossing pattern at this end");

    MoveResult r = start_result(d);
    Dart xb = d.opposite(x);
    int ej = d.edge_of(xb);
    // remove the arrow nearest the x end
    {
        auto& arr = r.d.edges[size_t(ei)].arrows;
        if (x == e.a)
            arr.erase(arr.begin());
        else
            arr.pop_back();
    }
    // insert at the xb end of its edge: pointing toward the crossing when the
    // pattern was (away, over); pointing away when it was (toward, under)
    {
        Edge& f = r.d.edges[size_t(ej)];
        int sign_toward = (xb == f.a) ? -1 : +1;  // toward the xb end
        int s = fwd ? sign_toward : -sign_toward;
        if (xb == f.a)
            f.arrows.insert(f.arrows.begin(), s);
        else
            f.arrows.push_back(s);
    }
    r.d.crossings[size_t(ci)].over ^= 1;
    return r;
}

MoveResult apply_rinf(const ArrowDiagram& d, const MoveSpec& m) {
    MoveResult r = start_result(d);
    if (m.loop >= 0) {
        int li = m.loop;
        if (li >= int(d.free_loops.size())) throw InvalidSite("Rinf loop index");
        if (!d.loop_is_exterior(li)) throw NotApplicable("loop is not exterior");
        FreeLoop& fl = r.d.free_loops[size_t(li)];
        std::reverse(fl.arrows.begin(), fl.arrows.end());
        for (auto& s : fl.arrows) s = -s;
        for (int t = 0; t < std::abs(m.p); ++t) fl.arrows.push_back(m.p > 0 ? -1 : +1);
        // children become roots, former root siblings become children
        for (size_t j = 0; j < r.d.free_loops.size(); ++j) {
            if (int(j) == li) continue;
            auto& p = r.d.free_loops[j].parent;
            if (p == Parent::loop(li))
                p = Parent::root();
            else if (p == Parent::root())
                p = Parent::loop(li);
        }
        for (auto& cp : r.d.comps) {
            if (cp.parent == Parent::loop(li))
                cp.parent = Parent::root();
            else if (cp.parent == Parent::root())
                cp.parent = Parent::loop(li);
        }
        r.loop_drawn_flip[size_t(li)] = true;
        return r;
    }
    int ei = m.edge;
    if (ei < 0 || ei >= int(d.edges.size())) throw InvalidSite("Rinf edge index");
    if (!d.edge_is_exterior(ei)) throw NotApplicable("edge is not exterior");
    const Edge& e = d.edges[size_t(ei)];
    ArrowDiagram::Region root{ArrowDiagram::Region::Kind::Root, -1};
    bool a_outer = d.side_region(e.a) == root;
    bool b_outer = d.side_region(e.b) == root;
    Dart new_outer_side = a_outer && !b_outer ? e.b : e.a;
    if (a_outer && b_outer) new_outer_side = (m.end == 0) ? e.a : e.b;
    int ci = d.component_of_dart(e.a);
    Dart old_outward = d.comps[size_t(ci)].outward;

    // siblings in the root region move into the old outward face
    for (auto& fl : r.d.free_loops)
        if (fl.parent == Parent::root()) fl.parent = Parent::face(old_outward);
    for (size_t j = 0; j < r.d.comps.size(); ++j) {
        if (int(j) == ci) continue;
        if (r.d.comps[j].parent == Parent::root()) r.d.comps[j].parent = Parent::face(old_outward);
    }
    r.d.comps[size_t(ci)].outward = new_outer_side;
    // the new arrows point along the dart on the new-outer side
    int sgn = (new_outer_side == e.a) ? +1 : -1;
    Edge& f = r.d.edges[size_t(ei)];
    for (int t = 0; t < std::abs(m.p); ++t) {
        int s = (m.p > 0) ? sgn : -sgn;
        if (m.end == 0)
            f.arrows.insert(f.arrows.begin(), s);
        else
            f.arrows.push_back(s);
    }
    r.d.normalize();
    return r;
}

}  // namespace

MoveResult apply_move(const ArrowDiagram& d, const MoveSpec& m) {
    MoveResult r = [&] {
        switch (m.kind) {
            case MoveSpec::Kind::R1Pos: return apply_r1pos(d, m);
            case MoveSpec::Kind::R1Neg: return apply_r1neg(d, m);
            case MoveSpec::Kind::R2Pos: return apply_r2pos(d, m);
            case MoveSpec::Kind::R2Neg: return apply_r2neg(d, m);
            case MoveSpec::Kind::R3: return apply_r3(d, m);
            case MoveSpec::Kind::R4Cancel:
            case MoveSpec::Kind::R4Insert:
            case MoveSpec::Kind::R4Slide: return apply_r4(d, m);
            case MoveSpec::Kind::R5: return apply_r5(d, m);
            case MoveSpec::Kind::Rinf: return apply_rinf(d, m);
            case MoveSpec::Kind::KMove: return apply_kmove(d, m);
        }
        throw std::logic_error("bad move kind");
    }();
    r.d.require_valid("move output");
    return r;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

std::vector<MoveSpec> applicable_moves(const ArrowDiagram& d, const KindFilter& filter) {
    std::vector<MoveSpec> out;
    auto try_push = [&](MoveSpec m) {
        try {
            apply_move(d, m);
            out.push_back(std::move(m));
        } catch (const DiagramError&) {
        }
    };
    using K = MoveSpec::Kind;
    if (filter.has(K::R1Neg)) {
        for (auto& e : d.edges)
            for (Dart x : {e.a, e.b})
                if (d.psi(x) == x) {
                    MoveSpec m;
                    m.kind = K::R1Neg;
                    m.a.dart = x;
                    try_push(m);
                }
    }
    if (filter.has(K::R2Neg)) {
        std::set<Dart> seen;
        for (auto& e : d.edges)
            for (Dart x : {e.a, e.b}) {
                if (seen.count(x)) continue;
                Dart y = d.psi(x);
                if (y != x && d.psi(y) == x) {
                    seen.insert(x);
                    seen.insert(y);
                    MoveSpec m;
                    m.kind = K::R2Neg;
                    m.a.dart = std::min(x, y);
                    try_push(m);
                }
            }
    }
    if (filter.has(K::R3)) {
        std::set<Dart> seen;
        for (auto& e : d.edges)
            for (Dart x : {e.a, e.b}) {
                if (seen.count(x)) continue;
                Dart y = d.psi(x), z = d.psi(y);
                if (y != x && z != x && z != y && d.psi(z) == x) {
                    seen.insert(x);
                    seen.insert(y);
                    seen.insert(z);
                    for (int mv = 0; mv < 3; ++mv) {
                        MoveSpec m;
                        m.kind = K::R3;
                        m.a.dart = std::min({x, y, z});
                        m.mover = mv;
                        try_push(m);
                    }
                }
            }
    }
    if (filter.has(K::R4Cancel) || filter.has(K::R4Slide)) {
        auto scan = [&](int edge, int loop, const std::vector<int>& arr, bool cyc) {
            int n = int(arr.size());
            int limit = cyc ? n : n - 1;
            for (int i = 0; i < limit; ++i) {
                int j = cyc ? (i + 1) % n : i + 1;
                if (n >= 2 && arr[size_t(i)] == -arr[size_t(j)]) {
                    for (K k : {K::R4Cancel, K::R4Slide}) {
                        if (!filter.has(k)) continue;
                        MoveSpec m;
                        m.kind = k;
                        m.edge = edge;
                        m.loop = loop;
                        m.pos = i;
                        try_push(m);
                    }
                }
            }
        };
        for (size_t ei = 0; ei < d.edges.size(); ++ei) scan(int(ei), -1, d.edges[ei].arrows, false);
        for (size_t li = 0; li < d.free_loops.size(); ++li) scan(-1, int(li), d.free_loops[li].arrows, true);
    }
    if (filter.has(K::R5)) {
        for (auto& e : d.edges)
            for (Dart x : {e.a, e.b}) {
                MoveSpec m;
                m.kind = K::R5;
                m.a.dart = x;
                try_push(m);
            }
    }
    if (filter.has(K::Rinf)) {
        for (size_t ei = 0; ei < d.edges.size(); ++ei) {
            if (!d.edge_is_exterior(int(ei))) continue;
            for (int end = 0; end < 2; ++end) {
                MoveSpec m;
                m.kind = K::Rinf;
                m.edge = int(ei);
                m.p = 1;
                m.end = end;
                try_push(m);
            }
        }
        for (size_t li = 0; li < d.free_loops.size(); ++li) {
            if (!d.loop_is_exterior(int(li))) continue;
            MoveSpec m;
            m.kind = K::Rinf;
            m.loop = int(li);
            m.p = 1;
            try_push(m);
        }
    }
    if (filter.has(K::KMove) && filter.kmove_k >= 1) {
        int k = filter.kmove_k;
        auto scan = [&](int edge, int loop, const std::vector<int>& arr, bool cyc) {
            for (int sign : {+1, -1}) {
                MoveSpec m;
                m.kind = K::KMove;
                m.k = k;
                m.edge = edge;
                m.loop = loop;
                m.pos = 0;
                m.sign = sign;
                m.insert = true;
                try_push(m);
            }
            int n = int(arr.size());
            int limit = cyc ? n : n - k + 1;
            for (int i = 0; i < limit && n >= k; ++i) {
                bool run = true;
                for (int t = 0; t < k; ++t) {
                    int idx = cyc ? (i + t) % n : i + t;
                    if (idx >= n || arr[size_t(idx)] != arr[size_t(i)]) run = false;
                }
                if (!run) continue;
                MoveSpec m;
                m.kind = K::KMove;
                m.k = k;
                m.edge = edge;
                m.loop = loop;
                m.pos = i;
                m.sign = arr[size_t(i)];
                m.insert = false;
                try_push(m);
            }
        };
        for (size_t ei = 0; ei < d.edges.size(); ++ei) scan(int(ei), -1, d.edges[ei].arrows, false);
        for (size_t li = 0; li < d.free_loops.size(); ++li) scan(-1, int(li), d.free_loops[li].arrows, true);
    }
    if (filter.has(K::R1Pos)) {
        for (auto& e : d.edges)
            for (Dart x : {e.a, e.b})
                for (int sign : {+1, -1})
                    for (int ov = 0; ov < 2; ++ov) {
                        MoveSpec m;
                        m.kind = K::R1Pos;
                        m.a.dart = x;
                        m.sign = sign;
                        m.over = ov;
                        try_push(m);
                    }
        for (size_t li = 0; li < d.free_loops.size(); ++li)
            for (int sign : {+1, -1})
                for (int ov = 0; ov < 2; ++ov) {
                    MoveSpec m;
                    m.kind = K::R1Pos;
                    m.a.is_loop = true;
                    m.a.loop = int(li);
                    m.sign = sign;
                    m.over = ov;
                    try_push(m);
                }
    }
    if (filter.has(K::R2Pos)) {
        // canonical sites: all pairs of sides sharing a region
        std::vector<Site> sides;
        for (auto& e : d.edges) {
            Site s1;
            s1.dart = e.a;
            sides.push_back(s1);
            Site s2;
            s2.dart = e.b;
            sides.push_back(s2);
        }
        for (size_t li = 0; li < d.free_loops.size(); ++li)
            for (bool in : {false, true}) {
                Site s;
                s.is_loop = true;
                s.loop = int(li);
                s.inside = in;
                sides.push_back(s);
            }
        for (auto& sa : sides)
            for (auto& sb : sides) {
                if (sa == sb) continue;
                for (int ov = 0; ov < 2; ++ov) {
                    MoveSpec m;
                    m.kind = K::R2Pos;
                    m.a = sa;
                    m.b = sb;
                    m.over = ov;
                    try {
                        if (!(site_region(d, sa) == site_region(d, sb))) continue;
                    } catch (const DiagramError&) {
                        continue;
                    }
                    try_push(m);
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {
const char* kind_name(MoveSpec::Kind k) {
    switch (k) {
        case MoveSpec::Kind::R1Pos: return "R1+";
        case MoveSpec::Kind::R1Neg: return "R1-";
        case MoveSpec::Kind::R2Pos: return "R2+";
        case MoveSpec::Kind::R2Neg: return "R2-";
        case MoveSpec::Kind::R3: return "R3";
        case MoveSpec::Kind::R4Cancel: return "R4cancel";
        case MoveSpec::Kind::R4Insert: return "R4insert";
        case MoveSpec::Kind::R4Slide: return "R4slide";
        case MoveSpec::Kind::R5: return "R5";
        case MoveSpec::Kind::Rinf: return "Rinf";
        case MoveSpec::Kind::KMove: return "KMove";
    }
    return "?";
}

ordered_json site_json(const Site& s) {
    ordered_json j;
    if (s.is_loop) {
        j["loop"] = s.loop;
        j["side"] = s.inside ? "in" : "out";
    } else {
        j["dart"] = s.dart;
    }
    return j;
}

Site site_from_json(const ordered_json& j) {
    Site s;
    if (j.contains("loop")) {
        s.is_loop = true;
        s.loop = j["loop"].get<int>();
        s.inside = j.value("side", "out") == std::string("in");
    } else {
        s.dart = j.at("dart").get<int>();
    }
    return s;
}
}  // namespace

std::string MoveSpec::str() const { return to_json(); }

std::string MoveSpec::to_json() const {
    ordered_json j;
    j["kind"] = kind_name(kind);
    switch (kind) {
        case Kind::R1Pos:
            j["site"] = site_json(a);
            j["sign"] = sign;
            j["over"] = over ? 1 : 0;
            break;
        case Kind::R1Neg:
        case Kind::R2Neg:
            j["dart"] = a.dart;
            break;
        case Kind::R3:
            j["dart"] = a.dart;
            j["mover"] = mover;
            break;
        case Kind::R2Pos:
            j["from"] = site_json(a);
            j["across"] = site_json(b);
            j["over"] = over ? 1 : 0;
            break;
        case Kind::R4Cancel:
        case Kind::R4Slide:
        case Kind::R4Insert:
            if (edge >= 0)
                j["edge"] = edge;
            else
                j["loop"] = loop;
            j["pos"] = pos;
            if (kind == Kind::R4Insert) j["sign"] = sign;
            break;
        case Kind::R5:
            j["dart"] = a.dart;
            break;
        case Kind::Rinf:
            j["p"] = p;
            if (edge >= 0) {
                j["edge"] = edge;
                j["end"] = end;
            } else {
                j["loop"] = loop;
            }
            break;
        case Kind::KMove:
            j["k"] = k;
            j["sign"] = sign;
            if (edge >= 0)
                j["edge"] = edge;
            else
                j["loop"] = loop;
            j["pos"] = pos;
            j["insert"] = insert;
            break;
    }
    return j.dump();
}

MoveSpec MoveSpec::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    std::string kn = j.at("kind").get<std::string>();
    MoveSpec m;
    auto kind_of = [&](const std::string& s) -> Kind {
        if (s == "R1+") return Kind::R1Pos;
        if (s == "R1-") return Kind::R1Neg;
        if (s == "R2+") return Kind::R2Pos;
        if (s == "R2-") return Kind::R2Neg;
        if (s == "R3") return Kind::R3;
        if (s == "R4cancel") return Kind::R4Cancel;
        if (s == "R4insert") return Kind::R4Insert;
        if (s == "R4slide") return Kind::R4Slide;
        if (s == "R5") return Kind::R5;
        if (s == "Rinf") return Kind::Rinf;
        if (s == "KMove") return Kind::KMove;
        throw DiagramError("MalformedJSON", "unknown move kind " + s);
    };
    m.kind = kind_of(kn);
    switch (m.kind) {
        case Kind::R1Pos:
            m.a = site_from_json(j.at("site"));
            m.sign = j.value("sign", 1);
            m.over = j.value("over", 0) != 0;
            break;
        case Kind::R1Neg:
        case Kind::R2Neg:
        case Kind::R5:
            m.a.dart = j.at("dart").get<int>();
            break;
        case Kind::R3:
            m.a.dart = j.at("dart").get<int>();
            m.mover = j.value("mover", 0);
            break;
        case Kind::R2Pos:
            m.a = site_from_json(j.at("from"));
            m.b = site_from_json(j.at("across"));
            m.over = j.value("over", 0) != 0;
            break;
        case Kind::R4Cancel:
        case Kind::R4Slide:
        case Kind::R4Insert:
            m.edge = j.value("edge", -1);
            m.loop = j.value("loop", -1);
            m.pos = j.value("pos", 0);
            m.sign = j.value("sign", 1);
            break;
        case Kind::Rinf:
            m.p = j.value("p", 1);
            m.edge = j.value("edge", -1);
            m.loop = j.value("loop", -1);
            m.end = j.value("end", 0);
            break;
        case Kind::KMove:
            m.k = j.at("k").get<int>();
            m.sign = j.value("sign", 1);
            m.edge = j.value("edge", -1);
            m.loop = j.value("loop", -1);
            m.pos = j.value("pos", 0);
            m.insert = j.value("insert", true);
            break;
    }
    return m;
}

std::string MoveTrace::to_json() const {
    ordered_json j;
    j["steps"] = ordered_json::array();
    for (auto& s : steps) {
        ordered_json e;
        e["spec"] = ordered_json::parse(s.spec.to_json());
        e["canonical"] = s.canon;
        j["steps"].push_back(e);
    }
    j["arrows_before"] = arrows_before;
    j["arrows_after"] = arrows_after;
    j["crossings_before"] = crossings_before;
    j["crossings_after"] = crossings_after;
    j["kink_sign_sum"] = kink_sign_sum;
    return j.dump();
}

}  // namespace hb
