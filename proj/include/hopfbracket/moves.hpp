#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfbracket/diagram.hpp"

namespace hb {

struct NotApplicable : DiagramError {
    explicit NotApplicable(const std::string& what) : DiagramError("NotApplicable", what) {}
};
struct InvalidSite : DiagramError {
    explicit InvalidSite(const std::string& what) : DiagramError("InvalidSite", what) {}
};

// A move site on the boundary of a region: one side of an edge (the side on
// the left of walking from `dart`), or one side of a free loop.
struct Site {
    bool is_loop = false;
    Dart dart = -1;   // edge side: identifies edge and end
    int loop = -1;    // loop index
    bool inside = false;  // loop side
    bool operator==(const Site&) const = default;
};

struct MoveSpec {
    enum class Kind {
        R1Pos,     // insert kink: dart = edge end (or loop), side, over
        R1Neg,     // remove kink: dart identifies the kink face orbit {dart}
        R2Pos,     // push finger from site a across site b; over bit
        R2Neg,     // remove bigon: dart identifies the bigon face
        R3,        // slide: dart identifies the triangle face; mover 0..2
        R4Cancel,  // cancel adjacent opposite arrows at pos, pos+1
        R4Insert,  // insert opposite pair at pos; sign = first arrow
        R4Slide,   // swap adjacent opposite arrows at pos, pos+1
        R5,        // move arrow across the crossing at dart's end; flips it
        Rinf,      // boundary move: re-root outer across edge/loop, add p arrows
        KMove,     // insert/delete k same-direction arrows
    };
    Kind kind{};
    // shared site fields; which are used depends on kind
    Site a, b;
    int edge = -1;    // edge index for arrow moves (R4*, KMove, Rinf, R1Pos on edge uses a.dart)
    int loop = -1;    // loop index for arrow moves
    int pos = 0;      // arrow position
    int sign = +1;    // arrow direction / kink side
    bool over = false;
    bool insert = true;  // KMove: insert or delete
    int k = 0;           // KMove modulus
    int p = 1;           // Rinf arrow count
    int mover = 0;       // R3
    int end = 0;         // Rinf: which end of the edge receives the arrows (0 = dart a)

    std::string str() const;
    std::string to_json() const;
    static MoveSpec from_json(const std::string&);
};

// directed entity for orientation transport
struct DirWitness {
    bool is_loop = false;
    Dart dart = -1;  // arrival dart
    int loop = -1;
    bool rev = false;  // reversed direction (exit dart / clockwise loop)
};

struct MoveResult {
    ArrowDiagram d;
    std::map<Dart, Dart> dart_map;          // surviving darts, old -> new
    std::vector<int> loop_map;              // old loop index -> new index or -1
    std::vector<bool> loop_drawn_flip;      // old loop: drawn orientation flipped
    std::vector<std::pair<DirWitness, DirWitness>> witnesses;  // extra orientation info
    int kink_sign = 0;                      // sign of a kink created by R1Pos
};

MoveResult apply_move(const ArrowDiagram& d, const MoveSpec& m);

struct KindFilter {
    std::vector<MoveSpec::Kind> kinds;
    int kmove_k = 0;  // for KMove enumeration
    bool has(MoveSpec::Kind k) const;
};

// complete enumeration for R1Neg, R2Neg, R3, R4Cancel, R4Slide, R5, Rinf,
// KMove (inserts at pos 0 in both directions plus all deletable runs);
// canonical sites only for the insertion moves R1Pos, R2Pos, R4Insert
std::vector<MoveSpec> applicable_moves(const ArrowDiagram& d, const KindFilter& filter);

struct TraceStep {
    MoveSpec spec;
    std::string canon;  // canonical form after application
};

struct MoveTrace {
    std::vector<TraceStep> steps;
    int arrows_before = 0, arrows_after = 0;
    int crossings_before = 0, crossings_after = 0;
    int kink_sign_sum = 0;  // sum of R1 kink signs at insertion time
    std::string to_json() const;
};

// orientation-aware application
struct OrientedMoveResult {
    OrientedDiagram od;
    MoveResult raw;
};
OrientedMoveResult apply_oriented(const OrientedDiagram& od, const MoveSpec& m);

// Fig.-2 style arrow elimination: returns an arrowless diagram of the same
// link plus the full trace.  Deterministic; outermost arrows first, pushes
// along shortest dual paths.
std::pair<ArrowDiagram, MoveTrace> eliminate_arrows(const ArrowDiagram& d);
std::pair<OrientedDiagram, MoveTrace> eliminate_arrows_oriented(const OrientedDiagram& od);
// want_canon=false skips per-step canonical forms in the trace (fast path)
std::pair<OrientedDiagram, MoveTrace> eliminate_arrows_oriented_opt(const OrientedDiagram& od, bool want_canon);

// single-arrow removal on an exterior arrow (one arrow in the whole diagram)
ArrowDiagram remove_exterior_arrow(const ArrowDiagram& d, MoveTrace* trace = nullptr);

// greedy reduction; with modulus k also normalizes arrow counts into [0, k)
ArrowDiagram simplify(const ArrowDiagram& d, std::optional<int> k, MoveTrace* trace = nullptr);

}  // namespace hb
