#include "pigraph/split_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pigraph {

bool split_graph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

namespace {

void verify_split_structure(const split_graph& g, bool ring_built,
                            std::uint64_t ring_order, std::uint64_t ideal_size,
                            std::uint64_t quotient_order) {
    const std::uint64_t a = g.a, b = g.b;
    if (b < 1) throw std::logic_error("split graph must have b >= 1");

    // Classify raw edges; counting suffices because edges cannot repeat.
    std::uint64_t aa = 0, ab = 0, bb = 0;
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || v <= u || v >= g.vertex_count())
            throw std::logic_error("malformed edge list");
        const bool ua = g.in_part_a(u), va = g.in_part_a(v);
        if (ua && va) ++aa;
        else if (!ua && !va) ++bb;
        else ++ab;
    }
    if (aa != a * (a - 1) / 2)
        throw std::logic_error("adjacency violates the clique structure on A");
    if (bb != 0)
        throw std::logic_error("adjacency violates independence of B");
    if (ab != a * b)
        throw std::logic_error("adjacency violates completeness between A and B");

    if (ring_built) {
        if (ring_order != ideal_size * quotient_order)
            throw std::logic_error("|R| = |P| * q fails");
        if (b != (a + 1) * (quotient_order - 1))
            throw std::logic_error("b = (a+1)(q-1) fails");
        if (a >= 1 && b < 2)
            throw std::logic_error("ring graph with a >= 1 must have b >= 2");
    }
}

} // namespace

split_graph build_graph(const ring_spec& r, const prime_ideal& p) {
    if (auto why = check_prime(r, p.members))
        throw std::invalid_argument("prime ideal failed verification: " + *why);
    if (p.quotient_order == 0 || r.order() != p.members.size() * p.quotient_order)
        throw std::invalid_argument("prime ideal carries an inconsistent quotient order");

    const std::vector<ring_element> all = enumerate_elements(r);
    const ring_element zero = zero_element(r);

    // Membership table indexed by element rank.
    std::vector<char> in_p(r.order(), 0);
    for (const ring_element& e : p.members) in_p[element_rank(r, e)] = 1;

    std::vector<ring_element> part_a, part_b;
    for (const ring_element& e : all) {
        if (e == zero) continue;
        (in_p[element_rank(r, e)] ? part_a : part_b).push_back(e);
    }
    // enumerate_elements is ascending, so both parts are already sorted.

    split_graph g;
    g.a = static_cast<int>(part_a.size());
    g.b = static_cast<int>(part_b.size());
    std::vector<ring_element> verts = part_a;
    verts.insert(verts.end(), part_b.begin(), part_b.end());
    for (const ring_element& e : verts) g.labels.push_back(to_string(e));

    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (in_p[element_rank(r, mul(r, verts[u], verts[v]))])
                g.edges.emplace_back(u, v);

    verify_split_structure(g, true, r.order(), p.members.size(), p.quotient_order);
    return g;
}

split_graph abstract_split_graph(int a, int b) {
    if (a < 0 || b < 1)
        throw std::invalid_argument("abstract split graph needs a >= 0, b >= 1");
    split_graph g;
    g.a = a;
    g.b = b;
    for (int i = 1; i <= a; ++i) g.labels.push_back("u" + std::to_string(i));
    for (int t = 1; t <= b; ++t) g.labels.push_back("v" + std::to_string(t));
    for (int u = 0; u < a; ++u) {
        for (int v = u + 1; v < a; ++v) g.edges.emplace_back(u, v);
        for (int v = a; v < a + b; ++v) g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    verify_split_structure(g, false, 0, 0, 0);
    return g;
}

int clique_number(const split_graph& g) {
    return g.a >= 1 ? g.a + 1 : 1;
}

std::vector<vertex_cover> minimal_vertex_covers_closed_form(const split_graph& g) {
    std::vector<vertex_cover> out;
    if (g.a == 0) return out;  // edgeless: only the empty cover

    vertex_cover all_a;
    for (int i = 0; i < g.a; ++i) all_a.members.push_back(i);
    out.push_back(all_a);

    for (int drop = 0; drop < g.a; ++drop) {
        vertex_cover c;
        for (int i = 0; i < g.a; ++i)
            if (i != drop) c.members.push_back(i);
        for (int v = g.a; v < g.vertex_count(); ++v) c.members.push_back(v);
        out.push_back(std::move(c));
    }
    return canonical_covers(std::move(out));
}

std::vector<vertex_cover> minimal_vertex_covers_bruteforce(const split_graph& g,
                                                           int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap || n >= 32)
        throw std::runtime_error("brute-force cover search capped at " +
                                 std::to_string(std::min(vertex_cap, 31)) +
                                 " vertices (got " + std::to_string(n) + ")");
    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges)
        edge_masks.push_back((1u << u) | (1u << v));

    std::vector<vertex_cover> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool covers = true;
        for (std::uint32_t m : edge_masks)
            if (!(s & m)) { covers = false; break; }
        if (!covers) continue;

        // Minimal iff every chosen vertex has an edge it alone covers.
        bool minimal = true;
        for (int w = 0; w < n && minimal; ++w) {
            if (!(s & (1u << w))) continue;
            bool private_edge = false;
            for (std::uint32_t m : edge_masks)
                if ((m & s) == (1u << w)) { private_edge = true; break; }
            minimal = private_edge;
        }
        if (!minimal) continue;

        vertex_cover c;
        for (int w = 0; w < n; ++w)
            if (s & (1u << w)) c.members.push_back(w);
        out.push_back(std::move(c));
    }
    return canonical_covers(std::move(out));
}

std::vector<vertex_cover> canonical_covers(std::vector<vertex_cover> covers) {
    for (vertex_cover& c : covers) std::sort(c.members.begin(), c.members.end());
    std::sort(covers.begin(), covers.end(),
              [](const vertex_cover& x, const vertex_cover& y) {
                  if (x.members.size() != y.members.size())
                      return x.members.size() < y.members.size();
                  return x.members < y.members;
              });
    return covers;
}

} // namespace pigraph
