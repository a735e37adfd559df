#include "hopfbracket/bracket.hpp"

#include <cstdlib>
#include <functional>
#include <thread>

#include "hopfbracket/moves.hpp"

namespace hb {

LaurentPoly tn_bracket_closed_form(long long n) {
    TPoly num;
    auto add = [&](long long e, int c) {
        Int v = num.coeff(int(e)) + c;
        num.set(int(e), v);
    };
    add(0, 1);
    add(n + 1, -1);
    add(n + 2, -1);
    add(2 * n + 1, 1);
    TPoly den;
    den.set(0, 1);
    den.set(2, -1);
    TPoly q = tpoly_exact_div(num, den);
    q.shift(1, int(n * (n - 1) / 2));
    LaurentPoly r = apoly_of(q);
    r.shift(1, int(3 * n * (n + 1)));
    return r;
}

namespace {

// x-trading relations, with x the oval carrying one counterclockwise arrow:
//   <oval(m+1)> = -A^2 <oval(m-1)> - A^-2 <oval(m), x beside it outside>
// and its half-turn image
//   <oval(m-1)> = -A^2 <oval(m+1)> - A^-2 <oval(m), x nested inside>.
// Everything below is solved from these two identities.

LaurentPoly a_pow(int e) { return LaurentPoly::a_power(e); }

// absorb one x sitting inside an oval of count m: {m-1: -A^2, m+1: -A^4}
// absorb one x sitting outside:                   {m+1: -A^2, m-1: -A^4}
void absorb_x(std::map<long long, LaurentPoly>& dist, bool from_inside) {
    std::map<long long, LaurentPoly> out;
    for (auto& [m, c] : dist) {
        long long lo = m - 1, hi = m + 1;
        LaurentPoly clo = c * (-a_pow(from_inside ? 2 : 4));
        LaurentPoly chi = c * (-a_pow(from_inside ? 4 : 2));
        out[lo] += clo;
        out[hi] += chi;
        if (out[lo].is_zero()) out.erase(lo);
        if (out[hi].is_zero()) out.erase(hi);
    }
    dist = std::move(out);
}

// expansion of an empty oval with net count m into disjoint sibling copies of
// x placed beside it: map j -> coefficient for the configuration of j x's
std::map<int, LaurentPoly> expand_empty(long long m) {
    if (m == 0) {
        return {{0, LaurentPoly::delta()}};
    }
    if (m == 1) {
        return {{1, LaurentPoly(Int(1))}};
    }
    if (m == -1) {
        // reversed x equals A^-6 x
        return {{1, a_pow(-6)}};
    }
    std::map<int, LaurentPoly> r;
    if (m >= 2) {
        // oval(m) = -A^2 oval(m-2) - A^-2 [oval(m-1), x outside]
        for (auto& [j, c] : expand_empty(m - 2)) r[j] += c * (-a_pow(2));
        for (auto& [j, c] : expand_empty(m - 1)) r[j + 1] += c * (-a_pow(-2));
    } else {
        // oval(m) = -A^-2 oval(m+2) - A^-4 [oval(m+1), x outside]
        for (auto& [j, c] : expand_empty(m + 2)) r[j] += c * (-a_pow(-2));
        for (auto& [j, c] : expand_empty(m + 1)) r[j + 1] += c * (-a_pow(-4));
    }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

}  // namespace

SkeinVector reduce_forest(const OvalForest& f) {
    // post-order: each subtree becomes a distribution over its own oval count;
    // children are expanded to x's beside them and absorbed into the node
    std::function<std::map<long long, LaurentPoly>(int)> reduce_node =
        [&](int node) -> std::map<long long, LaurentPoly> {
        // x-count distribution gathered from all children
        std::map<int, LaurentPoly> xs{{0, LaurentPoly(Int(1))}};
        for (int ch : f.nodes[size_t(node)].children) {
            auto chdist = reduce_node(ch);
            // expand the child oval into x's
            std::map<int, LaurentPoly> chx;
            for (auto& [m, c] : chdist)
                for (auto& [j, cc] : expand_empty(m)) chx[j] += c * cc;
            std::map<int, LaurentPoly> conv;
            for (auto& [j1, c1] : xs)
                for (auto& [j2, c2] : chx) conv[j1 + j2] += c1 * c2;
            xs = std::move(conv);
        }
        std::map<long long, LaurentPoly> dist;
        for (auto& [j, c] : xs) {
            std::map<long long, LaurentPoly> d0{{f.nodes[size_t(node)].net, c}};
            for (int i = 0; i < j; ++i) absorb_x(d0, true);
            for (auto& [m, cc] : d0) dist[m] += cc;
        }
        for (auto it = dist.begin(); it != dist.end();)
            it = it->second.is_zero() ? dist.erase(it) : std::next(it);
        return dist;
    };

    if (f.roots.empty()) throw DiagramError("EmptyDiagram", "bracket of the empty diagram is not defined");
    auto acc = reduce_node(f.roots[0]);
    for (size_t r = 1; r < f.roots.size(); ++r) {
        auto other = reduce_node(f.roots[r]);
        std::map<int, LaurentPoly> ox;
        for (auto& [m, c] : other)
            for (auto& [j, cc] : expand_empty(m)) ox[j] += c * cc;
        std::map<long long, LaurentPoly> out;
        for (auto& [j, cx] : ox) {
            auto d0 = acc;
            for (auto& [m, c] : d0) d0[m] = c * cx;
            for (int i = 0; i < j; ++i) absorb_x(d0, false);
            for (auto& [m, c] : d0) out[m] += c;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        acc = std::move(out);
    }
    SkeinVector sv;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) sv[m] = c;
    return sv;
}

LaurentPoly contract(const SkeinVector& sv) {
    LaurentPoly r;
    for (auto& [n, c] : sv) r += c * tn_bracket_closed_form(n);
    return r;
}

int default_thread_count() {
    if (const char* env = std::getenv("HOPFBRACKET_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

BracketResult bracket(const ArrowDiagram& d, const BracketOptions& opt) {
    int c = int(d.crossings.size());
    if (c > opt.max_crossings) throw TooManyCrossings(c);
    BracketResult res;
    res.states_evaluated = uint64_t(1) << c;

    bool arrowless = d.arrow_total() == 0;
    int nthreads = opt.threads > 0 ? opt.threads : default_thread_count();
    uint64_t total = res.states_evaluated;
    nthreads = int(std::min<uint64_t>(uint64_t(nthreads), total));

    // fast path: with no arrows every state reduces to delta^{ovals-1} T_0
    auto eval_range = [&](uint64_t lo, uint64_t hi, SkeinVector& sk) {
        for (uint64_t s = lo; s < hi; ++s) {
            int pc = __builtin_popcountll(s);
            int aexp = c - 2 * pc;
            if (arrowless) {
                OvalForest f = smooth_state(d, s);
                int m = f.oval_count();
                LaurentPoly term = a_pow(aexp);
                LaurentPoly delta = LaurentPoly::delta();
                for (int i = 1; i < m; ++i) term *= delta;
                sk[0] += term;
            } else {
                OvalForest f = smooth_state(d, s);
                SkeinVector sv = reduce_forest(f);
                for (auto& [n, cf] : sv) sk[n] += cf * a_pow(aexp);
            }
        }
        for (auto it = sk.begin(); it != sk.end();)
            it = it->second.is_zero() ? sk.erase(it) : std::next(it);
    };

    if (nthreads <= 1) {
        eval_range(0, total, res.skein);
    } else {
        std::vector<SkeinVector> parts;
        parts.resize(size_t(nthreads));
        std::vector<std::thread> ts;
        uint64_t chunk = (total + uint64_t(nthreads) - 1) / uint64_t(nthreads);
        for (int i = 0; i < nthreads; ++i) {
            uint64_t lo = uint64_t(i) * chunk, hi = std::min(total, lo + chunk);
            ts.emplace_back([&, lo, hi, i]() { eval_range(lo, hi, parts[size_t(i)]); });
        }
        for (auto& t : ts) t.join();
        // merge in partition order: identical result for any thread count
        for (auto& p : parts)
            for (auto& [n, cf] : p) res.skein[n] += cf;
        for (auto it = res.skein.begin(); it != res.skein.end();)
            it = it->second.is_zero() ? res.skein.erase(it) : std::next(it);
    }
    res.bracket = contract(res.skein);
    return res;
}

int writhe_normalization(const OrientedDiagram& od) {
    if (od.d.arrow_total() == 0) return writhe(od);
    auto [elim, trace] = eliminate_arrows_oriented_opt(od, false);
    return writhe(elim) - trace.kink_sign_sum;
}

LaurentPoly jones_apoly(const OrientedDiagram& od, const BracketOptions& opt) {
    BracketResult br = bracket(od.d, opt);
    int w = writhe_normalization(od);
    LaurentPoly v = br.bracket;
    v.shift((w % 2 == 0) ? Int(1) : Int(-1), -3 * w);  // (-A)^{-3w}
    return v;
}

TPoly jones(const OrientedDiagram& od, const BracketOptions& opt) {
    return tpoly_of(jones_apoly(od, opt));
}

CycloValue jones_at_root(const OrientedDiagram& od, int k, const BracketOptions& opt) {
    if (k < 1) throw DiagramError("KTooSmall", "root order must be >= 1");
    return lp_eval_cyclo(jones_apoly(od, opt), 4 * k);
}

}  // namespace hb
