#pragma once

#include "ecckit/graph.hpp"

// Fixture graphs shared across the suites.
namespace fixtures {

using ecckit::Graph;

inline Graph k2() { return Graph(2, {{0, 1}}); }

inline Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

inline Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

inline Graph c7() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
}

inline Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// K4 minus the edge {0,3}.
inline Graph diamond() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

// Six vertices, all edges except the antipodal pairs {0,3},{1,4},{2,5}.
inline Graph oct() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v - u != 3)
                edges.emplace_back(u, v);
    return Graph(6, edges);
}

// P4 on 0..3 plus vertices 4,5 adjacent to everything including each other.
inline Graph t1() {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {4, 5}};
    for (int x = 0; x < 4; ++x) {
        edges.emplace_back(4, x);
        edges.emplace_back(5, x);
    }
    return Graph(6, edges);
}

// Triangle {0,1,2}; 3 adjacent to 0,1,2,4; 4 adjacent to 1,2,3. The edge
// (3,4) dominates and leaves a complete graph behind.
inline Graph gprime_complete_host() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
}

// Two disjoint edges {0,1},{2,3} under an adjacent universal pair 4,5.
inline Graph gprime_disconnected_host() {
    std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}, {4, 5}};
    for (int x = 0; x < 4; ++x) {
        edges.emplace_back(4, x);
        edges.emplace_back(5, x);
    }
    return Graph(6, edges);
}

// Dominating edge (3,4) whose removal leaves components {0,1} and {2}, with
// U={0} and V={1} inside the same component. The five-set template cannot
// work here; the component-based cover must.
inline Graph same_component_host() {
    return Graph(5, {{0, 1}, {0, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
}

// Diameter-3 graph with independence number 2 on five vertices.
inline Graph diam3_small() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Graph two_triangles() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

} // namespace fixtures
