#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfbracket/bracket.hpp"
#include "hopfbracket/moves.hpp"

namespace hb {

struct KTooSmall : DiagramError {
    explicit KTooSmall(int k) : DiagramError("KTooSmall", "k = " + std::to_string(k) + " < 3") {}
};
struct NotDivisor : DiagramError {
    NotDivisor(int a, int k)
        : DiagramError("NotDivisor", std::to_string(a) + " does not divide " + std::to_string(k)) {}
};

// +1 for odd k, -1 for even k (k >= 3): the sign picked up by V(zeta_k)
// under one k-move
int theorem_sign(int k);

// epsilon for V(zeta_a) under one k-move, k = a*b: -1 iff a even and b odd
int divisor_sign(int k, int a);

struct KMoveWitness {
    bool holds = false;
    CycloValue before, after;
};
KMoveWitness check_kmove_theorem(const OrientedDiagram& od, const MoveSpec& kmove,
                                 const BracketOptions& opt = {});

// congruence class invariant under k-moves
struct KClassSignature {
    int k = 0;
    bool even = false;
    TPoly payload;                 // odd k: (sqrt t) V mod t^k-1; even: orbit representative
    std::vector<int> linking;      // pairwise lk mod k, row-major upper triangle
    bool operator==(const KClassSignature&) const = default;
    bool operator<(const KClassSignature& o) const;
    std::string str() const;
};

KClassSignature signature(const OrientedDiagram& od, int k, const BracketOptions& opt = {});

// Arf invariant from V(i): absent when V(i) = 0
std::optional<int> arf_from_jones(const OrientedDiagram& od, const BracketOptions& opt = {});

// number of 3-colorings: 3 |V(e^{i pi/3})|^2
Int colorings3(const OrientedDiagram& od, const BracketOptions& opt = {});

// determinant congruence for a claimed k-move pair, k = 2p even:
// i^{f(c)} V_{L'}(-1) = (-1)^p i^{f(c)} V_L(-1) mod k, f(c) = (c+1) mod 2
bool det_congruence(const OrientedDiagram& dl, const OrientedDiagram& dlp, int k,
                    const BracketOptions& opt = {});

// pairwise linking numbers mod k after arrow elimination
std::vector<int> linking_mod_k(const OrientedDiagram& od, int k);

struct ClassReport {
    struct Class {
        std::string signature;
        std::vector<std::string> members;
    };
    std::string table;
    int k = 0;
    std::vector<Class> classes;
    std::vector<std::pair<std::string, std::string>> failures;  // name -> error
    std::string to_json() const;
};

struct TableEntry {
    std::string name;
    int crossings = 0;
    std::string pd;
};

std::vector<TableEntry> load_table_csv(const std::string& path);
ClassReport classify_table(const std::vector<TableEntry>& table, int k,
                           const BracketOptions& opt = {});

}  // namespace hb
