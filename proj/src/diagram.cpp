#include "hopfbracket/diagram.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace hb {

int ArrowDiagram::arrow_total() const {
    int n = 0;
    for (auto& e : edges) n += int(e.arrows.size());
    for (auto& l : free_loops) n += int(l.arrows.size());
    return n;
}

int ArrowDiagram::crossing_of(Dart d) const {
    for (size_t i = 0; i < crossings.size(); ++i)
        for (int s = 0; s < 4; ++s)
            if (crossings[i].darts[size_t(s)] == d) return int(i);
    return -1;
}

int ArrowDiagram::slot_of(Dart d) const {
    for (auto& c : crossings)
        for (int s = 0; s < 4; ++s)
            if (c.darts[size_t(s)] == d) return s;
    return -1;
}

int ArrowDiagram::edge_of(Dart d) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].a == d || edges[i].b == d) return int(i);
    return -1;
}

Dart ArrowDiagram::sigma(Dart d) const {
    for (auto& c : crossings)
        for (int s = 0; s < 4; ++s)
            if (c.darts[size_t(s)] == d) return c.darts[size_t((s + 1) % 4)];
    throw DiagramError("DanglingDart", "sigma of dart not at a crossing");
}

Dart ArrowDiagram::sigma_inv(Dart d) const {
    for (auto& c : crossings)
        for (int s = 0; s < 4; ++s)
            if (c.darts[size_t(s)] == d) return c.darts[size_t((s + 3) % 4)];
    throw DiagramError("DanglingDart", "sigma_inv of dart not at a crossing");
}

Dart ArrowDiagram::alpha(Dart d) const {
    for (auto& e : edges) {
        if (e.a == d) return e.b;
        if (e.b == d) return e.a;
    }
    throw DiagramError("DanglingDart", "alpha of dart not on an edge");
}

bool ArrowDiagram::dart_on_over_strand(Dart d) const {
    for (auto& c : crossings)
        for (int s = 0; s < 4; ++s)
            if (c.darts[size_t(s)] == d) return (s % 2) == c.over;
    throw DiagramError("DanglingDart", "dart not at a crossing");
}

Dart ArrowDiagram::face_rep(Dart d) const {
    Dart m = d, cur = d;
    do {
        cur = psi(cur);
        m = std::min(m, cur);
    } while (cur != d);
    return m;
}

std::vector<Dart> ArrowDiagram::face_orbit(Dart d) const {
    std::vector<Dart> o;
    Dart cur = d;
    do {
        o.push_back(cur);
        cur = psi(cur);
    } while (cur != d);
    return o;
}

std::vector<Dart> ArrowDiagram::all_face_reps() const {
    std::set<Dart> seen, reps;
    for (auto& e : edges)
        for (Dart d : {e.a, e.b}) {
            if (seen.count(d)) continue;
            auto orb = face_orbit(d);
            reps.insert(*std::min_element(orb.begin(), orb.end()));
            for (Dart x : orb) seen.insert(x);
        }
    return std::vector<Dart>(reps.begin(), reps.end());
}

namespace {

// union-find over darts, keyed by value
struct DartUF {
    std::unordered_map<Dart, Dart> up;
    Dart find(Dart x) {
        auto it = up.find(x);
        if (it == up.end()) {
            up[x] = x;
            return x;
        }
        if (it->second == x) return x;
        Dart r = find(it->second);
        up[x] = r;
        return r;
    }
    void unite(Dart a, Dart b) {
        Dart ra = find(a), rb = find(b);
        if (ra != rb) up[std::max(ra, rb)] = std::min(ra, rb);
    }
};

DartUF crossed_components(const ArrowDiagram& d) {
    DartUF uf;
    for (auto& e : d.edges) uf.unite(e.a, e.b);
    for (auto& c : d.crossings)
        for (int s = 1; s < 4; ++s) uf.unite(c.darts[0], c.darts[size_t(s)]);
    return uf;
}

}  // namespace

int ArrowDiagram::component_of_dart(Dart d) const {
    DartUF uf = crossed_components(*this);
    std::set<Dart> roots;
    for (auto& e : edges) {
        roots.insert(uf.find(e.a));
    }
    Dart mine = uf.find(d);
    int i = 0;
    for (Dart r : roots) {
        if (r == mine) return i;
        ++i;
    }
    throw DiagramError("DanglingDart", "dart not in any component");
}

std::vector<std::vector<int>> ArrowDiagram::component_crossings() const {
    DartUF uf = crossed_components(*this);
    std::map<Dart, std::vector<int>> by_root;
    for (auto& e : edges) by_root[uf.find(e.a)];  // ensure entry even for crossing-free? (cannot happen)
    for (size_t i = 0; i < crossings.size(); ++i) by_root[uf.find(crossings[i].darts[0])].push_back(int(i));
    std::vector<std::vector<int>> out;
    for (auto& [r, v] : by_root) out.push_back(v);
    return out;
}

std::vector<ArrowDiagram::Strand> ArrowDiagram::strands() const {
    // successor on arrival darts: cross to the opposite dart, walk its edge
    std::set<Dart> unseen;
    for (auto& e : edges) {
        unseen.insert(e.a);
        unseen.insert(e.b);
    }
    std::vector<Strand> out;
    while (!unseen.empty()) {
        Dart start = *unseen.begin();
        std::vector<Dart> fwd;
        Dart cur = start;
        do {
            fwd.push_back(cur);
            unseen.erase(cur);
            cur = alpha(opposite(cur));
        } while (cur != start);
        // remove the reverse orbit of the same curve
        Dart rstart = opposite(start);
        cur = rstart;
        do {
            unseen.erase(cur);
            cur = alpha(opposite(cur));
        } while (cur != rstart);
        // canonical direction: orbit containing the smallest dart of the curve
        Dart fmin = *std::min_element(fwd.begin(), fwd.end());
        std::vector<Dart> rev;
        cur = rstart;
        do {
            rev.push_back(cur);
            cur = alpha(opposite(cur));
        } while (cur != rstart);
        Dart rmin = *std::min_element(rev.begin(), rev.end());
        out.push_back(Strand{fmin < rmin ? fwd : rev});
    }
    std::sort(out.begin(), out.end(), [](const Strand& x, const Strand& y) {
        return *std::min_element(x.arrivals.begin(), x.arrivals.end()) <
               *std::min_element(y.arrivals.begin(), y.arrivals.end());
    });
    return out;
}

int ArrowDiagram::link_component_count() const {
    return int(strands().size() + free_loops.size());
}

ArrowDiagram::Region ArrowDiagram::region_of_parent(const Parent& p) const {
    switch (p.kind) {
        case Parent::Kind::Root: return Region{Region::Kind::Root, -1};
        case Parent::Kind::Face: return Region{Region::Kind::Face, face_rep(p.ref)};
        case Parent::Kind::Loop: return Region{Region::Kind::LoopInside, p.ref};
    }
    throw std::logic_error("bad parent");
}

ArrowDiagram::Region ArrowDiagram::side_region(Dart d) const {
    Dart f = face_rep(d);
    int ci = component_of_dart(d);
    if (face_rep(comps[size_t(ci)].outward) == f) return region_of_parent(comps[size_t(ci)].parent);
    return Region{Region::Kind::Face, f};
}

ArrowDiagram::Region ArrowDiagram::loop_region(int loop, bool inside) const {
    if (inside) return Region{Region::Kind::LoopInside, loop};
    return region_of_parent(free_loops[size_t(loop)].parent);
}

Parent ArrowDiagram::parent_for_region(const Region& r) const {
    switch (r.kind) {
        case Region::Kind::Root: return Parent::root();
        case Region::Kind::Face: return Parent::face(r.ref);
        case Region::Kind::LoopInside: return Parent::loop(r.ref);
    }
    throw std::logic_error("bad region");
}

int ArrowDiagram::region_depth(const Region& r) const {
    // BFS over the region dual graph: arcs across edges and loops
    std::map<Region, int> dist;
    std::queue<Region> q;
    Region root{Region::Kind::Root, -1};
    dist[root] = 0;
    q.push(root);
    auto arcs = [&]() {
        std::vector<std::pair<Region, Region>> a;
        for (auto& e : edges) a.emplace_back(side_region(e.a), side_region(e.b));
        for (size_t l = 0; l < free_loops.size(); ++l)
            a.emplace_back(loop_region(int(l), false), loop_region(int(l), true));
        return a;
    }();
    while (!q.empty()) {
        Region cur = q.front();
        q.pop();
        if (cur == r) return dist[cur];
        for (auto& [x, y] : arcs) {
            Region nxt;
            if (x == cur)
                nxt = y;
            else if (y == cur)
                nxt = x;
            else
                continue;
            if (!dist.count(nxt)) {
                dist[nxt] = dist[cur] + 1;
                q.push(nxt);
            }
        }
    }
    if (dist.count(r)) return dist[r];
    throw DiagramError("BadParent", "region unreachable from the boundary");
}

bool ArrowDiagram::edge_is_exterior(int e) const {
    Region root{Region::Kind::Root, -1};
    return side_region(edges[size_t(e)].a) == root || side_region(edges[size_t(e)].b) == root;
}

ValidationReport ArrowDiagram::validate() const {
    ValidationReport rep;
    std::map<Dart, int> edge_use, cross_use;
    for (auto& e : edges) {
        if (e.a == e.b) rep.fail("BadRotation", "edge with identical darts");
        edge_use[e.a]++;
        edge_use[e.b]++;
    }
    for (auto& [d, n] : edge_use)
        if (n > 1) rep.fail("DanglingDart", "dart on multiple edges");
    for (auto& c : crossings) {
        std::set<Dart> s(c.darts.begin(), c.darts.end());
        if (s.size() != 4) rep.fail("BadRotation", "crossing with repeated darts");
        if (c.over != 0 && c.over != 1) rep.fail("BadRotation", "over selector out of range");
        for (Dart d : c.darts) {
            cross_use[d]++;
            if (!edge_use.count(d)) rep.fail("DanglingDart", "crossing dart not on any edge");
        }
    }
    for (auto& [d, n] : cross_use)
        if (n > 1) rep.fail("DanglingDart", "dart in multiple crossing slots");
    for (auto& [d, n] : edge_use)
        if (!cross_use.count(d)) rep.fail("DanglingDart", "edge dart not attached to a crossing");
    if (!rep.ok) return rep;

    // Euler characteristic per crossed component
    DartUF uf = crossed_components(*this);
    std::map<Dart, std::array<int, 3>> vef;  // V, E, F per component root
    for (size_t i = 0; i < crossings.size(); ++i) vef[uf.find(crossings[i].darts[0])][0]++;
    for (auto& e : edges) vef[uf.find(e.a)][1]++;
    std::set<Dart> seen;
    for (auto& e : edges)
        for (Dart d : {e.a, e.b}) {
            if (seen.count(d)) continue;
            auto orb = face_orbit(d);
            for (Dart x : orb) seen.insert(x);
            vef[uf.find(d)][2]++;
            rep.face_count++;
        }
    rep.crossed_components = int(vef.size());
    for (auto& [root, v] : vef) {
        int chi = v[0] - v[1] + v[2];
        rep.euler += chi;
        if (chi != 2) rep.fail("NotPlanar", "component has V-E+F = " + std::to_string(chi));
    }
    if (comps.size() != vef.size()) {
        rep.fail("BadParent", "component position records do not match components");
        return rep;
    }
    {
        int i = 0;
        for (auto& [root, v] : vef) {
            (void)v;
            const ComponentPos& cp = comps[size_t(i)];
            if (!edge_use.count(cp.outward) || uf.find(cp.outward) != root)
                rep.fail("BadParent", "outward dart not in its component");
            ++i;
        }
    }
    // parent references resolve, and the region forest is acyclic
    if (rep.ok) {
        try {
            for (auto& l : free_loops) {
                if (l.parent.kind == Parent::Kind::Face && !edge_use.count(l.parent.ref))
                    throw DiagramError("BadParent", "loop parent face dart missing");
                if (l.parent.kind == Parent::Kind::Loop &&
                    (l.parent.ref < 0 || l.parent.ref >= int(free_loops.size())))
                    throw DiagramError("BadParent", "loop parent index out of range");
                region_depth(region_of_parent(l.parent));
            }
            for (auto& cp : comps) region_depth(region_of_parent(cp.parent));
        } catch (const DiagramError& err) {
            rep.fail(err.code, err.what());
        }
    }
    if (rep.ok) rep.link_components = link_component_count();
    return rep;
}

void ArrowDiagram::require_valid(const char* ctx) const {
    auto rep = validate();
    if (!rep.ok) throw DiagramError("InvalidDiagram", std::string(ctx) + ": " + rep.errors.front());
}

void ArrowDiagram::normalize() {
    for (auto& e : edges) {
        if (e.a > e.b) {
            std::swap(e.a, e.b);
            std::reverse(e.arrows.begin(), e.arrows.end());
            for (auto& s : e.arrows) s = -s;
        }
    }
    // canonical face representatives in parents; outward faces of root
    // components become Root
    auto fix = [&](Parent& p) {
        if (p.kind != Parent::Kind::Face) return;
        Dart f = face_rep(p.ref);
        int ci = component_of_dart(f);
        if (face_rep(comps[size_t(ci)].outward) == f && comps[size_t(ci)].parent == Parent::root())
            p = Parent::root();
        else
            p = Parent::face(f);
    };
    for (auto& l : free_loops) fix(l.parent);
    for (auto& cp : comps) fix(cp.parent);
}

std::map<Dart, Dart> ArrowDiagram::compact() {
    std::map<Dart, Dart> m;
    Dart next = 0;
    for (auto& e : edges) {
        if (!m.count(e.a)) m[e.a] = next++;
        if (!m.count(e.b)) m[e.b] = next++;
    }
    for (auto& e : edges) {
        e.a = m[e.a];
        e.b = m[e.b];
        if (e.a > e.b) {
            std::swap(e.a, e.b);
            std::reverse(e.arrows.begin(), e.arrows.end());
            for (auto& s : e.arrows) s = -s;
        }
    }
    for (auto& c : crossings)
        for (auto& d : c.darts) d = m.at(d);
    for (auto& cp : comps) cp.outward = m.at(cp.outward);
    for (auto& l : free_loops)
        if (l.parent.kind == Parent::Kind::Face) l.parent.ref = m.at(l.parent.ref);
    for (auto& cp : comps)
        if (cp.parent.kind == Parent::Kind::Face) cp.parent.ref = m.at(cp.parent.ref);
    normalize();
    return m;
}

OrientedDiagram OrientedDiagram::canonical(const ArrowDiagram& d) {
    OrientedDiagram od;
    od.d = d;
    od.flip_strand.assign(d.strands().size(), false);
    od.flip_loop.assign(d.free_loops.size(), false);
    return od;
}

namespace {

// set of arrival darts under the chosen orientation
std::set<Dart> oriented_arrivals(const OrientedDiagram& od) {
    auto strands = od.d.strands();
    std::set<Dart> arr;
    for (size_t i = 0; i < strands.size(); ++i) {
        if (i < od.flip_strand.size() && od.flip_strand[i]) {
            // reverse orbit: arrivals are the opposite darts
            for (Dart x : strands[i].arrivals) arr.insert(od.d.opposite(x));
        } else {
            for (Dart x : strands[i].arrivals) arr.insert(x);
        }
    }
    return arr;
}

}  // namespace

int crossing_sign(const ArrowDiagram& d, const Crossing& c, const std::set<Dart>& arrivals) {
    Dart o_in = c.darts[size_t(c.over)];
    if (!arrivals.count(o_in)) o_in = c.darts[size_t(c.over + 2)];
    Dart o_out = d.opposite(o_in);
    Dart u_in = c.darts[size_t(1 - c.over)];
    if (!arrivals.count(u_in)) u_in = c.darts[size_t(3 - c.over)];
    Dart u_out = d.opposite(u_in);
    // positive: the under direction follows the over direction counterclockwise
    return d.sigma(o_out) == u_out ? +1 : -1;
}

int writhe(const OrientedDiagram& od) {
    auto arr = oriented_arrivals(od);
    int w = 0;
    for (auto& c : od.d.crossings) w += crossing_sign(od.d, c, arr);
    return w;
}

std::vector<std::vector<int>> linking_matrix(const OrientedDiagram& od) {
    const ArrowDiagram& d = od.d;
    if (d.arrow_total() > 0) throw DiagramError("ArrowsPresent", "linking matrix needs an arrowless diagram");
    auto strands = d.strands();
    int n = int(strands.size() + d.free_loops.size());
    if (n < 2) throw DiagramError("ComponentMismatch", "need at least 2 components");
    // map dart -> link component index
    std::map<Dart, int> comp_of;
    for (size_t i = 0; i < strands.size(); ++i) {
        for (Dart x : strands[i].arrivals) {
            comp_of[x] = int(i);
            comp_of[d.opposite(x)] = int(i);
        }
    }
    auto arr = oriented_arrivals(od);
    std::vector<std::vector<int>> twice(size_t(n), std::vector<int>(size_t(n), 0));
    for (auto& c : d.crossings) {
        int ca = comp_of.at(c.darts[0]);
        int cb = comp_of.at(c.darts[1]);
        if (ca == cb) continue;
        int s = crossing_sign(d, c, arr);
        twice[size_t(ca)][size_t(cb)] += s;
        twice[size_t(cb)][size_t(ca)] += s;
    }
    std::vector<std::vector<int>> lk(size_t(n), std::vector<int>(size_t(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (twice[size_t(i)][size_t(j)] % 2 != 0)
                throw DiagramError("ComponentMismatch", "odd inter-component crossing sum");
            lk[size_t(i)][size_t(j)] = twice[size_t(i)][size_t(j)] / 2;
        }
    return lk;
}

ArrowDiagram mirror(const ArrowDiagram& d) {
    ArrowDiagram m = d;
    for (auto& c : m.crossings) c.over ^= 1;
    return m;
}

}  // namespace hb
