#include <algorithm>
#include <map>
#include <queue>

#include "hopfbracket/forest.hpp"

namespace hb {

namespace {

struct UF {
    std::map<Dart, Dart> up;
    Dart find(Dart x) {
        auto it = up.find(x);
        if (it == up.end() || it->second == x) return x;
        Dart r = find(it->second);
        up[x] = r;
        return r;
    }
    void unite(Dart a, Dart b) {
        Dart ra = find(a), rb = find(b);
        if (ra != rb) up[std::max(ra, rb)] = std::min(ra, rb);
    }
};

// global region of the smoothed arrangement
struct Reg {
    int kind;  // 0 root, 1 merged face class (ref = class rep dart), 2 loop inside (ref = loop)
    int ref;
    bool operator<(const Reg& o) const { return std::tie(kind, ref) < std::tie(o.kind, o.ref); }
    bool operator==(const Reg& o) const { return kind == o.kind && ref == o.ref; }
};

}  // namespace

OvalForest smooth_state(const ArrowDiagram& d, uint64_t state) {
    // smoothing joins per crossing; merge the two opened face corners
    std::map<Dart, Dart> join;
    UF faces;
    std::map<Dart, Dart> frep;  // dart -> face rep (unsmoothed map)
    for (auto& e : d.edges)
        for (Dart x : {e.a, e.b})
            if (!frep.count(x)) {
                auto orb = d.face_orbit(x);
                Dart m = *std::min_element(orb.begin(), orb.end());
                for (Dart y : orb) frep[y] = m;
            }
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        int o = c.over;
        auto dd = [&](int k) { return c.darts[size_t((o + k) % 4)]; };
        bool bsm = (state >> i) & 1;
        if (!bsm) {
            // A: arcs (d_{o+1}, d_{o+2}), (d_{o+3}, d_o); merge corners d_o, d_{o+2}
            join[dd(1)] = dd(2);
            join[dd(2)] = dd(1);
            join[dd(3)] = dd(0);
            join[dd(0)] = dd(3);
            faces.unite(frep[dd(0)], frep[dd(2)]);
        } else {
            join[dd(0)] = dd(1);
            join[dd(1)] = dd(0);
            join[dd(2)] = dd(3);
            join[dd(3)] = dd(2);
            faces.unite(frep[dd(1)], frep[dd(3)]);
        }
    }

    // resolve a map face to its global region (outward classes dissolve into
    // the component's enclosing region)
    std::function<Reg(const Parent&)> region_of_parent = [&](const Parent& p) -> Reg {
        switch (p.kind) {
            case Parent::Kind::Root: return Reg{0, -1};
            case Parent::Kind::Loop: return Reg{2, p.ref};
            case Parent::Kind::Face: {
                Dart f = faces.find(frep.at(p.ref));
                int ci = d.component_of_dart(p.ref);
                Dart outw = faces.find(frep.at(d.comps[size_t(ci)].outward));
                if (f == outw) return region_of_parent(d.comps[size_t(ci)].parent);
                return Reg{1, f};
            }
        }
        throw std::logic_error("bad parent");
    };
    auto region_of_dart_side = [&](Dart x) -> Reg { return region_of_parent(Parent::face(x)); };

    // trace state curves: successor = join(alpha(x))
    struct Curve {
        long long net = 0;
        Reg left{0, -1}, right{0, -1};
    };
    std::vector<Curve> curves;
    std::set<Dart> todo;
    for (auto& e : d.edges) {
        todo.insert(e.a);
        todo.insert(e.b);
    }
    while (!todo.empty()) {
        Dart start = *todo.begin();
        Curve cv;
        cv.left = region_of_dart_side(start);
        cv.right = region_of_dart_side(d.alpha(start));
        Dart x = start;
        do {
            todo.erase(x);
            todo.erase(d.alpha(x));  // reverse direction belongs to the same curve
            const Edge& e = d.edges[size_t(d.edge_of(x))];
            long long s = 0;
            for (int a : e.arrows) s += a;
            cv.net += (x == e.a) ? s : -s;
            x = join.at(d.alpha(x));
        } while (x != start);
        curves.push_back(cv);
    }

    // region tree: nodes = regions, edges = curves and free loops
    struct Arc {
        Reg a, b;
        bool is_loop;
        int idx;  // curve index or loop index
    };
    std::vector<Arc> arcs;
    for (size_t i = 0; i < curves.size(); ++i)
        arcs.push_back(Arc{curves[i].left, curves[i].right, false, int(i)});
    for (size_t l = 0; l < d.free_loops.size(); ++l)
        arcs.push_back(Arc{region_of_parent(d.free_loops[l].parent), Reg{2, int(l)}, true, int(l)});

    // BFS from the root region; each arc is crossed exactly once (tree)
    std::map<Reg, std::pair<int, int>> entered;  // region -> (arc idx + 1, forest node) ; root pre-seeded
    OvalForest forest;
    forest.nodes.resize(arcs.size());
    std::map<Reg, int> region_node;  // region -> forest node bounding it from outside (-1 for root)
    region_node[Reg{0, -1}] = -1;
    std::queue<Reg> q;
    q.push(Reg{0, -1});
    std::vector<bool> used(arcs.size(), false);
    while (!q.empty()) {
        Reg cur = q.front();
        q.pop();
        int pnode = region_node.at(cur);
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (used[i]) continue;
            Reg other;
            if (arcs[i].a == cur)
                other = arcs[i].b;
            else if (arcs[i].b == cur)
                other = arcs[i].a;
            else
                continue;
            used[i] = true;
            int node = int(i);
            forest.nodes[size_t(node)].parent = pnode;
            if (pnode >= 0)
                forest.nodes[size_t(pnode)].children.push_back(node);
            else
                forest.roots.push_back(node);
            if (arcs[i].is_loop) {
                long long s = 0;
                for (int a : d.free_loops[size_t(arcs[i].idx)].arrows) s += a;
                forest.nodes[size_t(node)].net = s;
            } else {
                // counterclockwise traversal has the inside on the left
                const Curve& cv = curves[size_t(arcs[i].idx)];
                bool inner_is_left = (cv.left == other);
                forest.nodes[size_t(node)].net = inner_is_left ? cv.net : -cv.net;
            }
            if (region_node.count(other))
                throw DiagramError("NotPlanar", "state regions do not form a tree");
            region_node[other] = node;
            q.push(other);
        }
    }
    for (bool u : used)
        if (!u) throw DiagramError("BadParent", "state region graph disconnected");
    return forest;
}

}  // namespace hb
