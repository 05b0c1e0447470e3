#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pigraph/ring.hpp"

namespace pigraph {

// Complete split graph K_a v K~_b. Vertices 0..a-1 form the clique part A,
// vertices a..a+b-1 the independent part B; this ordering fixes the
// variable attachment x_1..x_a, y_1..y_b used by the edge ideal.
struct split_graph {
    int a = 0;
    int b = 0;
    std::vector<std::string> labels;            // A part first, then B part
    std::vector<std::pair<int, int>> edges;     // u < v, sorted

    int vertex_count() const { return a + b; }
    bool adjacent(int u, int v) const;
    bool in_part_a(int v) const { return v < a; }
};

struct vertex_cover {
    std::vector<int> members;  // sorted vertex indices
    auto operator<=>(const vertex_cover&) const = default;
};

// Graph on R \ {0} with x ~ y iff xy in P. The A/B partition comes from the
// ideal, and the complete-split structure plus the |R| = |P|*q arithmetic
// are re-verified from the raw adjacency; any violation is a hard error.
split_graph build_graph(const ring_spec& r, const prime_ideal& p);

// Synthetic K_a v K~_b on formal vertices u_1..u_a, v_1..v_b. Unlike ring
// graphs this admits b = 1, which no ring realizes.
split_graph abstract_split_graph(int a, int b);

// a + 1 for a >= 1, else 1.
int clique_number(const split_graph& g);

// The covers A and (A \ {u_i}) u B for 1 <= i <= a; empty list when a = 0
// (the edgeless graph's only minimal cover is the empty set).
std::vector<vertex_cover> minimal_vertex_covers_closed_form(const split_graph& g);

inline constexpr int default_cover_vertex_cap = 20;

// Exhaustive search over all vertex subsets; minimality checked by
// definition. Throws when the graph exceeds vertex_cap.
std::vector<vertex_cover> minimal_vertex_covers_bruteforce(
    const split_graph& g, int vertex_cap = default_cover_vertex_cap);

// Canonical form for set-of-sets comparison: members sorted, covers ordered
// by (size, members).
std::vector<vertex_cover> canonical_covers(std::vector<vertex_cover> covers);

} // namespace pigraph
