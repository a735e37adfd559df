#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

using Dart = int;

struct DiagramError : std::runtime_error {
    std::string code;
    DiagramError(std::string c, const std::string& what) : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// Containment reference for free loops and crossed components.
// Root: directly in the boundary region of the disk.
// Face: inside the face of the crossed map identified by (any) dart of its
//       face orbit.  Never the outward face of a root component (normalized
//       away to Root).
// Loop: inside free loop #ref.
struct Parent {
    enum class Kind : uint8_t { Root, Face, Loop };
    Kind kind = Kind::Root;
    int ref = -1;

    static Parent root() { return {}; }
    static Parent face(Dart d) { return {Kind::Face, d}; }
    static Parent loop(int i) { return {Kind::Loop, i}; }
    bool operator==(const Parent&) const = default;
};

// 4-valent crossing: darts in counterclockwise rotation order; `over`
// selects the over strand: 0 -> (darts[0], darts[2]), 1 -> (darts[1], darts[3]).
struct Crossing {
    std::array<Dart, 4> darts;
    int over = 0;
};

// Edge between two dart slots.  Arrow signs are listed along the edge from
// dart a to dart b; +1 points from a toward b.
struct Edge {
    Dart a = -1, b = -1;
    std::vector<int> arrows;
};

// Crossing-free closed curve.  Arrow signs are relative to the
// counterclockwise traversal of the curve as drawn in the disk.
struct FreeLoop {
    std::vector<int> arrows;
    Parent parent;
};

// Position of one connected crossed component: the dart naming its outward
// face (the face that merges with the enclosing region) plus the enclosing
// region itself.
struct ComponentPos {
    Dart outward = -1;
    Parent parent;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;  // entries start with NotPlanar / BadRotation / DanglingDart / BadParent
    int face_count = 0;               // map faces, summed over crossed components
    int euler = 0;                    // V - E + F summed per component (2 per component when planar)
    int link_components = 0;          // closed curves, crossed + free loops
    int crossed_components = 0;
    void fail(const std::string& code, const std::string& what) {
        ok = false;
        errors.push_back(code + ": " + what);
    }
};

class ArrowDiagram {
public:
    std::vector<Crossing> crossings;
    std::vector<Edge> edges;
    std::vector<FreeLoop> free_loops;
    std::vector<ComponentPos> comps;  // one per crossed component, in component order

    int dart_count() const { return int(edges.size()) * 2; }
    int arrow_total() const;

    // --- permutations of the map --------------------------------------
    // sigma: next dart counterclockwise around its crossing
    // alpha: the other dart of the same edge
    // psi = alpha(sigma(.)): face orbits; the orbit of d covers the corner
    //       between d and sigma(d), which lies on the left of d's direction.
    Dart sigma(Dart d) const;
    Dart sigma_inv(Dart d) const;
    Dart alpha(Dart d) const;
    Dart opposite(Dart d) const { return sigma(sigma(d)); }
    Dart psi(Dart d) const { return alpha(sigma(d)); }

    int crossing_of(Dart d) const;  // -1 if none
    int slot_of(Dart d) const;
    int edge_of(Dart d) const;  // -1 if none

    bool dart_on_over_strand(Dart d) const;

    // --- faces and components ------------------------------------------
    // face representative: minimal dart of the psi-orbit
    Dart face_rep(Dart d) const;
    std::vector<Dart> face_orbit(Dart d) const;
    std::vector<Dart> all_face_reps() const;
    // face on the left when walking from d's crossing along d's edge
    Dart left_face(Dart d) const { return face_rep(d); }

    int component_of_dart(Dart d) const;           // crossed component index
    std::vector<std::vector<int>> component_crossings() const;

    // link components: each is a cyclic dart sequence (arrival darts)
    struct Strand {
        std::vector<Dart> arrivals;  // strand successor orbit
    };
    std::vector<Strand> strands() const;              // one per crossed link component
    int link_component_count() const;                 // crossed strands + free loops

    // --- regions ---------------------------------------------------------
    // A region of the full diagram: the root region, a non-outward face of a
    // crossed component, or the inside of a free loop.
    struct Region {
        enum class Kind : uint8_t { Root, Face, LoopInside } kind = Kind::Root;
        int ref = -1;  // face rep dart, or loop index
        bool operator==(const Region&) const = default;
        bool operator<(const Region& o) const {
            if (kind != o.kind) return kind < o.kind;
            return ref < o.ref;
        }
    };
    Region region_of_parent(const Parent& p) const;
    Region side_region(Dart d) const;  // region on the left of walking d
    Region loop_region(int loop, bool inside) const;
    // depth in the region forest (root = 0)
    int region_depth(const Region& r) const;
    Parent parent_for_region(const Region& r) const;

    // --- invariants / queries ---------------------------------------------
    ValidationReport validate() const;
    void require_valid(const char* ctx) const;

    bool edge_is_exterior(int e) const;  // borders the root region
    bool loop_is_exterior(int l) const { return free_loops[size_t(l)].parent == Parent::root(); }

    // normalization: each edge stored with a < b (arrow lists flipped as
    // needed), parents of loops in outward faces of root components -> Root
    void normalize();

    // renumber darts to 0..2E-1 preserving order of first use; returns old->new
    std::map<Dart, Dart> compact();

    bool operator==(const ArrowDiagram&) const = default;
};

// orientation: per link component an arrival dart (crossed) or loop index,
// plus a direction flag; flag=false means the canonical forward direction.
struct OrientedDiagram {
    ArrowDiagram d;
    // for crossed strands: one chosen arrival dart per strand; traversal
    // follows the strand-successor orbit from it.  flip inverts.
    std::vector<bool> flip_strand;  // size = strands().size()
    std::vector<bool> flip_loop;    // size = free_loops.size(); false = counterclockwise

    static OrientedDiagram canonical(const ArrowDiagram& d);
};

int writhe(const OrientedDiagram& od);

// sign of one crossing given the set of arrival darts of the orientation
int crossing_sign(const ArrowDiagram& d, const Crossing& c, const std::set<Dart>& arrivals);

// pairwise linking matrix; requires an arrowless diagram with >= 2 components
std::vector<std::vector<int>> linking_matrix(const OrientedDiagram& od);

// deterministic mirror: flip every over selector
ArrowDiagram mirror(const ArrowDiagram& d);

// --- serialization (json_io.cpp) -------------------------------------------
std::string to_json(const ArrowDiagram& d);
ArrowDiagram from_json(const std::string& text);

// --- PD import (pd.cpp) -----------------------------------------------------
// "X[a,b,c,d];X[...]" with labels 1..2c, counterclockwise from the incoming
// under-strand.  Empty code -> one arrowless free loop.
ArrowDiagram import_pd(const std::string& code);

// --- canonical form (canonical.cpp) -----------------------------------------
std::string canonical_form(const ArrowDiagram& d);

}  // namespace hb
