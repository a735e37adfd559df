#pragma once

#include <set>
#include <string>
#include <vector>

#include "hopfbracket/bracket.hpp"
#include "hopfbracket/moves.hpp"

namespace hb {

// oval with |n| arrows, counterclockwise for n >= 0
ArrowDiagram tn_diagram(long long n);

// V_{T_n}(t) by the exact closed form
TPoly vt_formula(long long n);

// representatives [1..s], s = floor((k-1)/2), verified: pairwise-distinct
// exact |V_{T_n}(zeta_k)|^2 and strictly increasing float sequence
struct MonotonicityFailure : DiagramError {
    explicit MonotonicityFailure(const std::string& w) : DiagramError("MonotonicityFailure", w) {}
};
std::vector<int> class_representatives(int k);

// canonicalized value: for even k the pair {v, -v} is identified
CycloValue canonical_value(const CycloValue& v, int k);

struct EnumerateOptions {
    int max_crossings_guard = 4;
    BracketOptions bracket;
};

// all values V(zeta_k) over diagrams with <= c crossings and <= s link
// components, arrows reduced into [0, k) per edge, every outer-face choice,
// canonicalized (even k identifies v with -v)
std::set<CycloValue> enumerate_value_set(int c, int s, int k, const EnumerateOptions& opt = {});

struct HopfBoundCertificate {
    int k = 0, c = 0, s = 0;
    size_t value_set_size = 0;
    std::string target_name;
    CycloValue target_value;  // canonicalized
    bool bound_holds = false;  // h(target) > c
    uint64_t diagrams_evaluated = 0;
    double seconds = 0;
    std::string to_json() const;
};

HopfBoundCertificate hopf_lower_bound(const OrientedDiagram& target, const std::string& name,
                                      int k, int c, int s, const EnumerateOptions& opt = {});

// diagram connected sum: splice an exterior edge of b into an exterior edge
// of a (both components end up in one map)
ArrowDiagram connected_sum(const ArrowDiagram& a, const ArrowDiagram& b);

// move family for the lens space L_{p,1}: Rinf(p) replaces Rinf(1)
struct LensMoveKit {
    int p = 1;
    MoveSpec rinf(int edge, int end) const;
    MoveSpec rinf_loop(int loop) const;
};
LensMoveKit lens_move_kit(int p);

}  // namespace hb
