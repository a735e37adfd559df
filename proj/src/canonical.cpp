#include <algorithm>
#include <map>
#include <sstream>

#include "hopfbracket/diagram.hpp"

namespace hb {

namespace {

std::string cyclic_min(const std::vector<int>& signs) {
    if (signs.empty()) return "";
    std::string s;
    for (int x : signs) s += (x > 0 ? '+' : '-');
    std::string best = s;
    for (size_t r = 1; r < s.size(); ++r) {
        std::string rot = s.substr(r) + s.substr(0, r);
        best = std::min(best, rot);
    }
    return best;
}

// relabel the component containing start (start gets id 0) and encode it;
// child_tags: face rep dart -> sorted child encodings, folded into the bytes
std::string encode_component(const ArrowDiagram& d, Dart start, Dart outward,
                             const std::map<Dart, std::vector<std::string>>& child_tags) {
    std::map<Dart, int> id;
    std::vector<Dart> order;
    auto assign = [&](Dart x) {
        if (!id.count(x)) {
            id[x] = int(order.size());
            order.push_back(x);
        }
    };
    assign(start);
    for (size_t k = 0; k < order.size(); ++k) {
        Dart x = order[k];
        Dart s1 = d.sigma(x);
        assign(s1);
        assign(d.sigma(s1));
        assign(d.sigma(d.sigma(s1)));
        assign(d.alpha(x));
    }
    std::ostringstream os;
    // crossings, sorted by min new id, rotated to start at it
    std::vector<std::array<int, 5>> cr;
    for (auto& c : d.crossings) {
        if (!id.count(c.darts[0])) continue;
        int ids[4];
        for (int s = 0; s < 4; ++s) ids[s] = id.at(c.darts[size_t(s)]);
        int rot = int(std::min_element(ids, ids + 4) - ids);
        cr.push_back({ids[rot], ids[(rot + 1) % 4], ids[(rot + 2) % 4], ids[(rot + 3) % 4],
                      (c.over + rot) % 2});
    }
    std::sort(cr.begin(), cr.end());
    os << "V";
    for (auto& c : cr) os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ";" << c[4] << ")";
    // edges with arrows oriented from the smaller new id
    std::vector<std::string> es;
    for (auto& e : d.edges) {
        if (!id.count(e.a)) continue;
        int ia = id.at(e.a), ib = id.at(e.b);
        std::vector<int> arr = e.arrows;
        if (ia > ib) {
            std::swap(ia, ib);
            std::reverse(arr.begin(), arr.end());
            for (auto& s : arr) s = -s;
        }
        std::ostringstream eo;
        eo << "(" << ia << "," << ib << ":";
        for (int s : arr) eo << (s > 0 ? '+' : '-');
        eo << ")";
        es.push_back(eo.str());
    }
    std::sort(es.begin(), es.end());
    os << "E";
    for (auto& e : es) os << e;
    // outward face by minimal new id over the orbit
    auto face_min_id = [&](Dart f) {
        int m = INT32_MAX;
        for (Dart x : d.face_orbit(f)) m = std::min(m, id.at(x));
        return m;
    };
    os << "O" << face_min_id(outward);
    // children by canonical face id
    std::vector<std::pair<int, std::string>> kids;
    for (auto& [f, tags] : child_tags)
        for (auto& t : tags) kids.emplace_back(face_min_id(f), t);
    std::sort(kids.begin(), kids.end());
    os << "C";
    for (auto& [fid, t] : kids) os << "[" << fid << ":" << t << "]";
    return os.str();
}

}  // namespace

std::string canonical_form(const ArrowDiagram& d0) {
    ArrowDiagram d = d0;
    d.normalize();

    // containment forest over components and loops
    int nc = int(d.comps.size()), nl = int(d.free_loops.size());
    // node ids: 0..nc-1 components, nc..nc+nl-1 loops, root = -1
    auto parent_node = [&](const Parent& p) -> std::pair<int, Dart> {
        // returns (node id, face for component nodes)
        switch (p.kind) {
            case Parent::Kind::Root: return {-1, -1};
            case Parent::Kind::Loop: return {nc + p.ref, -1};
            case Parent::Kind::Face: {
                Dart f = d.face_rep(p.ref);
                return {d.component_of_dart(f), f};
            }
        }
        throw std::logic_error("bad parent");
    };
    std::vector<std::vector<int>> children(size_t(nc + nl));
    std::vector<int> roots;
    std::vector<std::pair<int, Dart>> pos(size_t(nc + nl));
    for (int i = 0; i < nc; ++i) {
        pos[size_t(i)] = parent_node(d.comps[size_t(i)].parent);
        if (pos[size_t(i)].first < 0)
            roots.push_back(i);
        else
            children[size_t(pos[size_t(i)].first)].push_back(i);
    }
    for (int l = 0; l < nl; ++l) {
        pos[size_t(nc + l)] = parent_node(d.free_loops[size_t(l)].parent);
        if (pos[size_t(nc + l)].first < 0)
            roots.push_back(nc + l);
        else
            children[size_t(pos[size_t(nc + l)].first)].push_back(nc + l);
    }

    // component index -> darts of that component
    std::vector<std::vector<Dart>> comp_darts;
    comp_darts.resize(size_t(nc));
    for (auto& e : d.edges) {
        int c = d.component_of_dart(e.a);
        comp_darts[size_t(c)].push_back(e.a);
        comp_darts[size_t(c)].push_back(e.b);
    }

    // bottom-up encoding
    std::vector<std::string> enc(size_t(nc + nl));
    std::vector<bool> done(size_t(nc + nl), false);
    std::function<std::string(int)> encode = [&](int node) -> std::string {
        if (done[size_t(node)]) return enc[size_t(node)];
        std::vector<std::string> kid_tags;
        std::map<Dart, std::vector<std::string>> face_tags;
        for (int k : children[size_t(node)]) {
            std::string t = encode(k);
            if (node < nc && pos[size_t(k)].second >= 0)
                face_tags[pos[size_t(k)].second].push_back(t);
            else
                kid_tags.push_back(t);
        }
        for (auto& [f, v] : face_tags) std::sort(v.begin(), v.end());
        std::string r;
        if (node < nc) {
            std::string best;
            for (Dart s : comp_darts[size_t(node)]) {
                std::string e = encode_component(d, s, d.comps[size_t(node)].outward, face_tags);
                if (best.empty() || e < best) best = e;
            }
            r = "M{" + best + "}";
        } else {
            std::sort(kid_tags.begin(), kid_tags.end());
            r = "L{" + cyclic_min(d.free_loops[size_t(node - nc)].arrows) + ";";
            for (auto& t : kid_tags) r += t;
            r += "}";
        }
        done[size_t(node)] = true;
        enc[size_t(node)] = r;
        return r;
    };
    std::vector<std::string> top;
    for (int r : roots) top.push_back(encode(r));
    std::sort(top.begin(), top.end());
    std::string out = "D";
    for (auto& t : top) out += t;
    return out;
}

}  // namespace hb
