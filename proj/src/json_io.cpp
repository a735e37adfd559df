#include <json.hpp>

#include "hopfbracket/diagram.hpp"

namespace hb {

using nlohmann::ordered_json;

namespace {

std::string parent_str(const ArrowDiagram& d, const Parent& p) {
    switch (p.kind) {
        case Parent::Kind::Root: return "outer";
        case Parent::Kind::Face: return "face:" + std::to_string(d.face_rep(p.ref));
        case Parent::Kind::Loop: return "loop:" + std::to_string(p.ref);
    }
    throw std::logic_error("bad parent");
}

Parent parse_parent(const std::string& s) {
    if (s == "outer") return Parent::root();
    if (s.rfind("face:", 0) == 0) return Parent::face(std::stoi(s.substr(5)));
    if (s.rfind("loop:", 0) == 0) return Parent::loop(std::stoi(s.substr(5)));
    throw DiagramError("MalformedJSON", "bad parent reference: " + s);
}

}  // namespace

std::string to_json(const ArrowDiagram& d) {
    ordered_json j;
    j["crossings"] = ordered_json::array();
    for (auto& c : d.crossings) {
        ordered_json jc;
        jc["darts"] = {c.darts[0], c.darts[1], c.darts[2], c.darts[3]};
        jc["over"] = c.over;
        j["crossings"].push_back(jc);
    }
    j["edges"] = ordered_json::array();
    for (auto& e : d.edges) j["edges"].push_back({e.a, e.b});
    ordered_json arrows = ordered_json::object();
    for (size_t i = 0; i < d.edges.size(); ++i)
        if (!d.edges[i].arrows.empty()) arrows[std::to_string(i)] = d.edges[i].arrows;
    j["arrows"] = arrows;
    j["free_loops"] = ordered_json::array();
    for (auto& l : d.free_loops) {
        ordered_json jl;
        jl["arrows"] = l.arrows;
        jl["parent"] = parent_str(d, l.parent);
        j["free_loops"].push_back(jl);
    }
    if (d.comps.empty()) {
        j["outer"] = nullptr;
    } else if (d.comps.size() == 1 && d.comps[0].parent == Parent::root()) {
        j["outer"] = d.comps[0].outward;
    } else {
        j["outer"] = d.comps[0].outward;
        ordered_json jc = ordered_json::array();
        for (auto& cp : d.comps) {
            ordered_json e;
            e["outward"] = cp.outward;
            e["parent"] = parent_str(d, cp.parent);
            jc.push_back(e);
        }
        j["components"] = jc;
    }
    return j.dump();
}

ArrowDiagram from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DiagramError("MalformedJSON", e.what());
    }
    ArrowDiagram d;
    for (auto& jc : j.value("crossings", ordered_json::array())) {
        Crossing c;
        auto darts = jc.at("darts");
        if (darts.size() != 4) throw DiagramError("MalformedJSON", "crossing needs 4 darts");
        for (int s = 0; s < 4; ++s) c.darts[size_t(s)] = darts[size_t(s)].get<int>();
        c.over = jc.value("over", 0);
        d.crossings.push_back(c);
    }
    for (auto& je : j.value("edges", ordered_json::array())) {
        if (je.size() != 2) throw DiagramError("MalformedJSON", "edge needs 2 darts");
        Edge e;
        e.a = je[0].get<int>();
        e.b = je[1].get<int>();
        d.edges.push_back(e);
    }
    if (j.contains("arrows"))
        for (auto& [k, v] : j["arrows"].items()) {
            size_t idx = size_t(std::stoi(k));
            if (idx >= d.edges.size()) throw DiagramError("MalformedJSON", "arrow key out of range");
            d.edges[idx].arrows = v.get<std::vector<int>>();
            for (int s : d.edges[idx].arrows)
                if (s != 1 && s != -1) throw DiagramError("MalformedJSON", "arrow signs must be +-1");
        }
    for (auto& jl : j.value("free_loops", ordered_json::array())) {
        FreeLoop l;
        l.arrows = jl.value("arrows", std::vector<int>{});
        for (int s : l.arrows)
            if (s != 1 && s != -1) throw DiagramError("MalformedJSON", "arrow signs must be +-1");
        l.parent = parse_parent(jl.value("parent", std::string("outer")));
        d.free_loops.push_back(l);
    }
    if (j.contains("components") && !j["components"].is_null()) {
        for (auto& je : j["components"]) {
            ComponentPos cp;
            cp.outward = je.at("outward").get<int>();
            cp.parent = parse_parent(je.at("parent").get<std::string>());
            d.comps.push_back(cp);
        }
    } else if (j.contains("outer") && !j["outer"].is_null()) {
        ComponentPos cp;
        cp.outward = j["outer"].get<int>();
        cp.parent = Parent::root();
        d.comps.push_back(cp);
    }
    if (!d.crossings.empty() || !d.edges.empty()) {
        if (d.comps.empty()) throw DiagramError("MalformedJSON", "missing outer face");
        std::sort(d.comps.begin(), d.comps.end(), [&](const ComponentPos& x, const ComponentPos& y) {
            return d.component_of_dart(x.outward) < d.component_of_dart(y.outward);
        });
        auto rep = d.validate();
        if (!rep.ok) throw DiagramError("InvalidDiagram", rep.errors.front());
    } else if (!d.comps.empty()) {
        throw DiagramError("MalformedJSON", "outer dart without a map");
    }
    d.normalize();
    return d;
}

}  // namespace hb
