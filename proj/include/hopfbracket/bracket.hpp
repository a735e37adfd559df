#pragma once

#include <cstdint>
#include <map>

#include "hopfbracket/cyclo.hpp"
#include "hopfbracket/forest.hpp"
#include "hopfbracket/laurent.hpp"

namespace hb {

struct TooManyCrossings : DiagramError {
    explicit TooManyCrossings(int n) : DiagramError("TooManyCrossings", std::to_string(n) + " crossings") {}
};

// finite sum  sum_n coeff_n * <T_n>  over the torus-curve family
using SkeinVector = std::map<long long, LaurentPoly>;

// <T_n> = A^{3n(n+1)} t^{n(n-1)/2} (1 - t^{n+1} - t^{n+2} + t^{2n+1})/(1 - t^2),
// t = A^-4; the division is exact for every integer n.
LaurentPoly tn_bracket_closed_form(long long n);

// reduce an oval forest to the torus-curve family via the one-arrow-oval
// trading relations
SkeinVector reduce_forest(const OvalForest& f);

LaurentPoly contract(const SkeinVector& sv);

struct BracketResult {
    LaurentPoly bracket;
    SkeinVector skein;
    uint64_t states_evaluated = 0;
};

struct BracketOptions {
    int max_crossings = 20;
    int threads = 0;  // 0: HOPFBRACKET_THREADS or hardware
};

BracketResult bracket(const ArrowDiagram& d, const BracketOptions& opt = {});

// writhe exponent W with V = (-A)^{-3W} <D>; for arrowless diagrams this is
// the plain crossing-sign writhe, otherwise derived from a deterministic
// arrow elimination (final writhe minus created kink signs)
int writhe_normalization(const OrientedDiagram& od);

LaurentPoly jones_apoly(const OrientedDiagram& od, const BracketOptions& opt = {});
TPoly jones(const OrientedDiagram& od, const BracketOptions& opt = {});

// exact V at t = zeta_k, computed in Z[A]/Phi_{4k} with sqrt(t) = A^-2
CycloValue jones_at_root(const OrientedDiagram& od, int k, const BracketOptions& opt = {});

int default_thread_count();

}  // namespace hb
