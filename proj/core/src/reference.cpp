#include "cce/reference.hpp"

namespace cce {

Digraph acyclic_triangle_witness() {
    return Digraph(9, {{1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
                       {7, 1}, {7, 2}, {8, 2}, {8, 3}, {9, 1}, {9, 3}});
}

Digraph acyclic_square_witness() {
    // 5 sits between the cycle pairs (4,1) and (2,3).
    return Digraph(11, {{1, 5}, {4, 5}, {5, 2}, {5, 3}, {1, 6}, {2, 6}, {2, 7}, {3, 7},
                        {3, 8}, {4, 8}, {9, 1}, {9, 2}, {10, 1}, {10, 4}, {11, 4}, {11, 3}});
}

}  // namespace cce
