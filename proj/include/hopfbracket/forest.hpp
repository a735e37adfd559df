#pragma once

#include <cstdint>
#include <vector>

#include "hopfbracket/diagram.hpp"

namespace hb {

// A crossing-free state: nesting forest of ovals, each with a net arrow
// count (signs counterclockwise as drawn, opposite adjacent arrows already
// cancelled).
struct OvalForest {
    struct Node {
        long long net = 0;
        int parent = -1;  // -1: adjacent to the boundary region
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    std::vector<int> roots;

    int oval_count() const { return int(nodes.size()); }
};

// Replace every crossing by its chosen smoothing (bit 0 = A, bit 1 = B; bit i
// of `state` belongs to crossings[i]) and return the resulting nesting forest
// of closed curves together with the untouched free loops.
OvalForest smooth_state(const ArrowDiagram& d, uint64_t state);

}  // namespace hb
