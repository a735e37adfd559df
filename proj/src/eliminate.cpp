#include <algorithm>
#include <functional>
#include <set>

#include "hopfbracket/moves.hpp"

namespace hb {

namespace {

std::set<Dart> arrivals_of(const OrientedDiagram& od) {
    auto strands = od.d.strands();
    std::set<Dart> arr;
    for (size_t i = 0; i < strands.size(); ++i) {
        bool flip = i < od.flip_strand.size() && od.flip_strand[i];
        for (Dart x : strands[i].arrivals) arr.insert(flip ? od.d.opposite(x) : x);
    }
    return arr;
}

int strand_index_of_dart(const std::vector<ArrowDiagram::Strand>& strands, const ArrowDiagram& d, Dart x) {
    for (size_t i = 0; i < strands.size(); ++i)
        for (Dart a : strands[i].arrivals)
            if (a == x || d.opposite(a) == x) return int(i);
    return -1;
}

}  // namespace

OrientedMoveResult apply_oriented(const OrientedDiagram& od, const MoveSpec& m) {
    MoveResult raw = apply_move(od.d, m);
    OrientedMoveResult out;
    out.od.d = raw.d;

    std::set<Dart> old_arr = arrivals_of(od);
    auto new_strands = out.od.d.strands();
    out.od.flip_strand.assign(new_strands.size(), false);
    out.od.flip_loop.assign(out.od.d.free_loops.size(), false);

    // loops surviving by index mapping
    for (size_t li = 0; li < raw.loop_map.size(); ++li) {
        int ni = raw.loop_map[li];
        if (ni < 0) continue;
        bool f = li < od.flip_loop.size() ? od.flip_loop[li] : false;
        if (li < raw.loop_drawn_flip.size() && raw.loop_drawn_flip[li]) f = !f;
        out.od.flip_loop[size_t(ni)] = f;
    }

    // strand orientation via intact edges
    std::set<std::pair<Dart, Dart>> old_pairs;
    for (auto& e : od.d.edges) old_pairs.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    std::vector<bool> fixed(new_strands.size(), false);
    auto new_arr_canonical = [&](Dart x) {
        for (auto& st : new_strands)
            for (Dart a : st.arrivals)
                if (a == x) return true;
        return false;
    };
    for (auto& e : out.od.d.edges) {
        if (!old_pairs.count({std::min(e.a, e.b), std::max(e.a, e.b)})) continue;
        int si = strand_index_of_dart(new_strands, out.od.d, e.a);
        if (si < 0 || fixed[size_t(si)]) continue;
        // e.a kept its arrival status through the move
        bool should = old_arr.count(e.a) > 0;
        bool canon = new_arr_canonical(e.a);
        out.od.flip_strand[size_t(si)] = (should != canon);
        fixed[size_t(si)] = true;
    }
    // explicit witnesses
    for (auto& [ow, nw] : raw.witnesses) {
        bool old_dir_actual;
        if (ow.is_loop) {
            bool f = ow.loop < int(od.flip_loop.size()) ? od.flip_loop[size_t(ow.loop)] : false;
            old_dir_actual = (f == ow.rev);  // stated direction equals actual
        } else {
            bool arr = old_arr.count(ow.dart) > 0;
            old_dir_actual = (arr != ow.rev);
        }
        if (nw.is_loop) {
            if (nw.loop < 0 || nw.loop >= int(out.od.flip_loop.size())) continue;
            bool should_ccw = (old_dir_actual != nw.rev);
            out.od.flip_loop[size_t(nw.loop)] = !should_ccw;
        } else {
            int si = strand_index_of_dart(new_strands, out.od.d, nw.dart);
            if (si < 0 || fixed[size_t(si)]) continue;
            bool should_arrival = (old_dir_actual != nw.rev);
            bool canon = new_arr_canonical(nw.dart);
            out.od.flip_strand[size_t(si)] = (should_arrival != canon);
            fixed[size_t(si)] = true;
        }
    }
    out.raw = raw;
    return out;
}

// ---------------------------------------------------------------------------
// arrow elimination
// ---------------------------------------------------------------------------

namespace {

struct Eliminator {
    OrientedDiagram od;
    MoveTrace trace;
    bool want_canon = true;

    void step(const MoveSpec& m) {
        OrientedMoveResult r = apply_oriented(od, m);
        if (m.kind == MoveSpec::Kind::R1Pos) trace.kink_sign_sum += r.raw.kink_sign;
        od = std::move(r.od);
        trace.steps.push_back(TraceStep{m, want_canon ? canonical_form(od.d) : std::string()});
    }

    bool cancel_all() {
        bool any = false;
        for (;;) {
            KindFilter f;
            f.kinds = {MoveSpec::Kind::R4Cancel};
            auto ms = applicable_moves(od.d, f);
            if (ms.empty()) return any;
            step(ms.front());
            any = true;
        }
    }

    // region dual path: first site to push across, from `from`, toward root
    std::optional<Site> first_obstacle(ArrowDiagram::Region from) {
        const ArrowDiagram& d = od.d;
        ArrowDiagram::Region root{ArrowDiagram::Region::Kind::Root, -1};
        if (from == root) return std::nullopt;
        // BFS from root; record how each region was first entered
        struct ArcRef {
            bool is_loop;
            int idx;
            Dart dart;  // for edges: dart whose left face is the farther region
        };
        std::map<ArrowDiagram::Region, std::pair<ArrowDiagram::Region, ArcRef>> pred;
        std::vector<ArrowDiagram::Region> queue{root};
        std::set<ArrowDiagram::Region> seen{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto cur = queue[qi];
            for (size_t ei = 0; ei < d.edges.size(); ++ei) {
                for (Dart x : {d.edges[ei].a, d.edges[ei].b}) {
                    auto rx = d.side_region(x);
                    auto ry = d.side_region(x == d.edges[ei].a ? d.edges[ei].b : d.edges[ei].a);
                    if (!(ry == cur) || seen.count(rx)) continue;
                    seen.insert(rx);
                    pred[rx] = {cur, ArcRef{false, int(ei), x}};
                    queue.push_back(rx);
                }
            }
            for (size_t li = 0; li < d.free_loops.size(); ++li) {
                auto ro = d.loop_region(int(li), false);
                auto ri = d.loop_region(int(li), true);
                if (ro == cur && !seen.count(ri)) {
                    seen.insert(ri);
                    pred[ri] = {cur, ArcRef{true, int(li), -1}};
                    queue.push_back(ri);
                } else if (ri == cur && !seen.count(ro)) {
                    seen.insert(ro);
                    pred[ro] = {cur, ArcRef{true, int(li), -1}};
                    queue.push_back(ro);
                }
            }
        }
        if (!pred.count(from)) throw DiagramError("BadParent", "region not reachable");
        auto [prev, arc] = pred.at(from);
        Site s;
        if (arc.is_loop) {
            s.is_loop = true;
            s.loop = arc.idx;
            // side facing `from`
            s.inside = od.d.loop_region(arc.idx, true) == from;
        } else {
            // dart whose left side faces `from`
            Dart x = arc.dart;
            s.dart = (od.d.side_region(x) == from) ? x : od.d.alpha(x);
            if (!(od.d.side_region(s.dart) == from)) s.dart = x;
        }
        return s;
    }

    // one elimination round: remove or advance one arrow; returns false when
    // no arrows remain
    bool round() {
        cancel_all();
        const ArrowDiagram& d = od.d;
        if (d.arrow_total() == 0) return false;

        // candidate arrows with their region depth
        struct Cand {
            int depth;
            bool is_loop;
            int idx;  // edge or loop
        };
        std::optional<Cand> best;
        for (size_t ei = 0; ei < d.edges.size(); ++ei) {
            if (d.edges[ei].arrows.empty()) continue;
            int dep = std::min(d.region_depth(d.side_region(d.edges[ei].a)),
                               d.region_depth(d.side_region(d.edges[ei].b)));
            if (!best || dep < best->depth) best = Cand{dep, false, int(ei)};
        }
        for (size_t li = 0; li < d.free_loops.size(); ++li) {
            if (d.free_loops[li].arrows.empty()) continue;
            int dep = d.region_depth(d.loop_region(int(li), false));
            if (!best || dep < best->depth) best = Cand{dep, true, int(li)};
        }
        if (!best) return false;

        if (best->is_loop) {
            int li = best->idx;
            if (d.loop_is_exterior(li)) {
                // removable direction: the boundary move plus a cancellation
                // strictly reduces the arrow count
                {
                    Eliminator probe = *this;
                    MoveSpec m;
                    m.kind = MoveSpec::Kind::Rinf;
                    m.loop = li;
                    m.p = 1;
                    probe.step(m);
                    probe.cancel_all();
                    if (probe.od.d.arrow_total() < d.arrow_total()) {
                        *this = std::move(probe);
                        return true;
                    }
                }
                // otherwise kink the loop and continue on edges
                MoveSpec m;
                m.kind = MoveSpec::Kind::R1Pos;
                m.a.is_loop = true;
                m.a.loop = li;
                m.sign = +1;
                m.over = false;
                step(m);
                return true;
            }
            // push the loop one region outward
            auto from = d.loop_region(li, false);
            auto site = first_obstacle(from);
            if (!site) throw std::logic_error("interior region without obstacle");
            MoveSpec m;
            m.kind = MoveSpec::Kind::R2Pos;
            m.a.is_loop = true;
            m.a.loop = li;
            m.a.inside = false;
            m.b = *site;
            for (int ov = 0; ov < 2; ++ov) {
                m.over = ov;
                try {
                    step(m);
                    return true;
                } catch (const DiagramError&) {
                }
            }
            throw DiagramError("NotApplicable", "cannot push loop outward");
        }

        int ei = best->idx;
        // exterior edge: try to remove an end arrow
        if (d.edge_is_exterior(ei)) {
            int start_arrows = d.arrow_total();
            // direct removal: the boundary move followed by a cancellation
            auto try_rinf = [&](Eliminator& el, int edge) {
                for (int end = 0; end < 2; ++end) {
                    Eliminator probe = el;
                    try {
                        MoveSpec m;
                        m.kind = MoveSpec::Kind::Rinf;
                        m.edge = edge;
                        m.p = 1;
                        m.end = end;
                        probe.step(m);
                        probe.cancel_all();
                        if (probe.od.d.arrow_total() < start_arrows) {
                            el = std::move(probe);
                            return true;
                        }
                    } catch (const DiagramError&) {
                    }
                }
                return false;
            };
            if (try_rinf(*this, ei)) return true;
            // non-removable: kink next to the arrow, hop it in, remove it
            ArrowDiagram::Region root{ArrowDiagram::Region::Kind::Root, -1};
            const Edge& e = d.edges[size_t(ei)];
            for (Dart outer_dart : {e.a, e.b}) {
                if (!(d.side_region(outer_dart) == root)) continue;
                for (int sgn : {+1, -1})
                    for (int ov = 0; ov < 2; ++ov) {
                        Eliminator probe = *this;
                        try {
                            MoveSpec mk;
                            mk.kind = MoveSpec::Kind::R1Pos;
                            mk.a.dart = outer_dart;
                            mk.sign = sgn;
                            mk.over = ov;
                            probe.step(mk);
                            // hop the arrow across the fresh kink crossing
                            const ArrowDiagram& pd = probe.od.d;
                            const Crossing& X = pd.crossings.back();
                            bool hopped = false;
                            for (Dart cd : X.darts) {
                                int ce = pd.edge_of(cd);
                                if (ce < 0 || pd.edges[size_t(ce)].arrows.empty()) continue;
                                MoveSpec mh;
                                mh.kind = MoveSpec::Kind::R5;
                                mh.a.dart = cd;
                                try {
                                    probe.step(mh);
                                    hopped = true;
                                    break;
                                } catch (const DiagramError&) {
                                }
                            }
                            if (!hopped) continue;
                            // the arrow sits on the kink lobe now; remove it
                            const ArrowDiagram& qd = probe.od.d;
                            int lobe = -1;
                            for (size_t kk = 0; kk < qd.edges.size(); ++kk)
                                if (!qd.edges[kk].arrows.empty() && qd.edge_is_exterior(int(kk)) &&
                                    qd.crossing_of(qd.edges[kk].a) == qd.crossing_of(qd.edges[kk].b))
                                    lobe = int(kk);
                            if (lobe < 0) continue;
                            if (!try_rinf(probe, lobe)) continue;
                            *this = std::move(probe);
                            return true;
                        } catch (const DiagramError&) {
                        }
                    }
            }
            throw DiagramError("NotApplicable", "cannot remove exterior arrow");
        }

        // interior edge: push a finger from the shallower side across the
        // next obstacle, then hop the arrow onto the tip
        const Edge& e = d.edges[size_t(ei)];
        auto rA = d.side_region(e.a), rB = d.side_region(e.b);
        int dA = d.region_depth(rA), dB = d.region_depth(rB);
        auto from = dA <= dB ? rA : rB;
        auto site = first_obstacle(from);
        if (!site) throw std::logic_error("interior edge with root region side");
        // push from the end nearest the first arrow: both ends work; use a
        for (Dart u : {e.a, e.b}) {
            if (!(d.side_region(u) == from)) continue;
            for (int ov = 0; ov < 2; ++ov) {
                Eliminator probe = *this;
                try {
                    MoveSpec m;
                    m.kind = MoveSpec::Kind::R2Pos;
                    m.a.dart = u;
                    m.b = *site;
                    m.over = ov;
                    probe.step(m);
                    // hop the first arrow across c2 onto the tip edge
                    const ArrowDiagram& pd = probe.od.d;
                    const Crossing& C2 = pd.crossings.back();
                    MoveSpec mh;
                    mh.kind = MoveSpec::Kind::R5;
                    bool hopped = false;
                    for (Dart cd : C2.darts) {
                        int ce = pd.edge_of(cd);
                        if (ce < 0 || pd.edges[size_t(ce)].arrows.empty()) continue;
                        mh.a.dart = cd;
                        try {
                            probe.step(mh);
                            hopped = true;
                            break;
                        } catch (const DiagramError&) {
                        }
                    }
                    if (!hopped) continue;
                    *this = std::move(probe);
                    return true;
                } catch (const DiagramError&) {
                }
            }
        }
        throw DiagramError("NotApplicable", "cannot push arrow outward");
    }
};

}  // namespace

std::pair<OrientedDiagram, MoveTrace> eliminate_arrows_oriented_opt(const OrientedDiagram& od, bool want_canon) {
    Eliminator el;
    el.od = od;
    el.want_canon = want_canon;
    el.trace.arrows_before = od.d.arrow_total();
    el.trace.crossings_before = int(od.d.crossings.size());
    int stuck = 0, last = od.d.arrow_total();
    while (el.round()) {
        int now = el.od.d.arrow_total();
        if (now < last) {
            last = now;
            stuck = 0;
        } else if (++stuck > 8 * (int(el.od.d.edges.size()) + int(el.od.d.free_loops.size()) + 4)) {
            throw DiagramError("NoProgress", "arrow elimination did not terminate");
        }
    }
    el.trace.arrows_after = el.od.d.arrow_total();
    el.trace.crossings_after = int(el.od.d.crossings.size());
    return {el.od, el.trace};
}

std::pair<OrientedDiagram, MoveTrace> eliminate_arrows_oriented(const OrientedDiagram& od) {
    return eliminate_arrows_oriented_opt(od, true);
}

std::pair<ArrowDiagram, MoveTrace> eliminate_arrows(const ArrowDiagram& d) {
    auto [od, tr] = eliminate_arrows_oriented(OrientedDiagram::canonical(d));
    return {od.d, tr};
}

ArrowDiagram remove_exterior_arrow(const ArrowDiagram& d, MoveTrace* trace) {
    if (d.arrow_total() != 1) throw DiagramError("NotSingleArrow", "diagram must carry exactly one arrow");
    bool exterior = false;
    for (size_t ei = 0; ei < d.edges.size(); ++ei)
        if (!d.edges[ei].arrows.empty() && d.edge_is_exterior(int(ei))) exterior = true;
    for (size_t li = 0; li < d.free_loops.size(); ++li)
        if (!d.free_loops[li].arrows.empty() && d.loop_is_exterior(int(li))) exterior = true;
    if (!exterior) throw DiagramError("NotExterior", "the arrow is not on an exterior strand");
    auto [res, tr] = eliminate_arrows(d);
    // with no other arrows present the re-routed arc slides back over the
    // diagram (a sequence of plain Reidemeister moves); combinatorially the
    // result is the input without its arrow, with any helper kink undone
    ArrowDiagram out = res;
    {
        KindFilter f;
        f.kinds = {MoveSpec::Kind::R1Neg};
        for (;;) {
            auto ms = applicable_moves(out, f);
            if (ms.empty() || int(out.crossings.size()) <= int(d.crossings.size())) break;
            out = apply_move(out, ms.front()).d;
        }
    }
    if (trace) *trace = tr;
    ArrowDiagram expected = d;
    for (auto& e : expected.edges) e.arrows.clear();
    for (auto& l : expected.free_loops) l.arrows.clear();
    if (canonical_form(out) == canonical_form(expected)) return expected;
    return out;
}

ArrowDiagram simplify(const ArrowDiagram& d, std::optional<int> k, MoveTrace* trace) {
    MoveTrace tr;
    tr.arrows_before = d.arrow_total();
    tr.crossings_before = int(d.crossings.size());
    ArrowDiagram cur = d;
    auto apply1 = [&](const MoveSpec& m) {
        cur = apply_move(cur, m).d;
        tr.steps.push_back(TraceStep{m, canonical_form(cur)});
    };
    bool progress = true;
    int guard = 0;
    while (progress && ++guard < 10000) {
        progress = false;
        // opposite-arrow cancellations
        for (;;) {
            KindFilter f;
            f.kinds = {MoveSpec::Kind::R4Cancel};
            auto ms = applicable_moves(cur, f);
            if (ms.empty()) break;
            apply1(ms.front());
            progress = true;
        }
        // arrow count normalization into [0, k)
        if (k && *k >= 1) {
            auto normalize_list = [&](int edge, int loop, const std::vector<int>& arr) {
                long long net = 0;
                for (int s : arr) net += s;
                long long tgt = ((net % *k) + *k) % *k;
                if (tgt == net) return false;
                long long mdiff = (tgt - net) / *k;
                int sgn = mdiff > 0 ? +1 : -1;
                for (long long t = 0; t < std::abs(mdiff); ++t) {
                    MoveSpec m;
                    m.kind = MoveSpec::Kind::KMove;
                    m.k = *k;
                    m.sign = sgn;
                    m.edge = edge;
                    m.loop = loop;
                    m.pos = 0;
                    m.insert = true;
                    apply1(m);
                }
                return true;
            };
            for (size_t ei = 0; ei < cur.edges.size(); ++ei)
                if (normalize_list(int(ei), -1, cur.edges[ei].arrows)) progress = true;
            for (size_t li = 0; li < cur.free_loops.size(); ++li)
                if (normalize_list(-1, int(li), cur.free_loops[li].arrows)) progress = true;
            // inserted opposite runs cancel next pass
            continue;
        }
        // crossing reductions
        KindFilter f;
        f.kinds = {MoveSpec::Kind::R1Neg, MoveSpec::Kind::R2Neg};
        auto ms = applicable_moves(cur, f);
        if (!ms.empty()) {
            apply1(ms.front());
            progress = true;
        }
    }
    if (k && *k >= 1) {
        // after normalization rounds, run the reductions once more to a fixpoint
        bool more = true;
        while (more && ++guard < 20000) {
            more = false;
            KindFilter f;
            f.kinds = {MoveSpec::Kind::R4Cancel, MoveSpec::Kind::R1Neg, MoveSpec::Kind::R2Neg};
            auto ms = applicable_moves(cur, f);
            if (!ms.empty()) {
                apply1(ms.front());
                more = true;
            }
        }
    }
    tr.arrows_after = cur.arrow_total();
    tr.crossings_after = int(cur.crossings.size());
    if (trace) *trace = tr;
    return cur;
}

}  // namespace hb
