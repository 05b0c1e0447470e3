#pragma once

#include <string>
#include <vector>

#include "pigraph/counting.hpp"
#include "pigraph/monomial.hpp"
#include "pigraph/split_graph.hpp"

namespace pigraph {

// Edge ideal I = J + K of a complete split graph: clique pairs x_i x_j plus
// cross pairs x_i y_t, C(a,2) + a*b squarefree quadrics in total. a = 0
// gives the zero ideal.
struct edge_ideal_model {
    int a = 0;
    int b = 0;
    monomial_ideal ideal{0, 0};
};

edge_ideal_model edge_ideal(const split_graph& g,
                            std::size_t gen_cap = default_pair_cap);

// Exponent data (alpha | beta) of a degree-2n monomial, together with the
// membership conditions characterizing the minimal generators of I^n:
// |alpha| + |beta| = 2n, |beta| <= n, and every alpha_i <= n.
struct generator_pattern {
    std::vector<int> alpha;
    std::vector<int> beta;
    int n = 0;

    static generator_pattern of(const monomial& m, int n);
    bool valid() const;
};

bool is_minimal_power_generator(const monomial& m, int n);

// All monomials matching the pattern above, enumerated stratum by stratum
// in s = |beta|. Equal degrees make the set pairwise incomparable, so it is
// already the minimal generating set of I^n.
monomial_ideal closed_form_generators(int a, int b, int n,
                                      std::size_t gen_cap = default_pair_cap);

// Exact generator count of I^n:
//   sum_{s=0}^{n} C(s+b-1, b-1) * [ C(2n-s+a-1, a-1) - a*C(n-s+a-2, a-1) ].
// a = 0 returns 0.
bignum count_generators(int a, int b, int n);

// Generators of the q-th power of the complete-graph ideal I(K_a):
// { x^delta : |delta| = 2q, delta_i <= q }; q = 0 gives the unit ideal.
// ny widens the (empty) y-block so results are comparable across rings.
monomial_ideal complete_graph_power_generators(int a, int q, int ny = 0);

// Generators of the s-th power of the cross ideal (x_i y_t):
// { x^gamma y^beta : |gamma| = |beta| = s }; s = 0 gives the unit ideal.
monomial_ideal cross_power_generators(int a, int b, int s);

// mu(I^n) = C(n+b-1, b-1) for the star graph K_{1,b}.
bignum star_count(int b, int n);

// One monomial prime of the decomposition, named by 1-based variable indices.
struct prime_component {
    std::vector<int> x_vars;
    std::vector<int> y_vars;

    monomial_ideal to_ideal(int a, int b) const;
    std::vector<std::string> labels() const;
    std::size_t size() const { return x_vars.size() + y_vars.size(); }
};

struct primary_decomposition {
    std::vector<prime_component> components;
};

// The a+1 minimal primes of I: p_0 = (x_1..x_a) and, for each i,
// p_i = (x_1..x_a without x_i, y_1..y_b). Requires a >= 1.
primary_decomposition minimal_primes(int a, int b);

monomial_ideal intersect_components(const primary_decomposition& dec, int a, int b,
                                    std::size_t pair_cap = default_pair_cap);

// True iff the fold of the minimal primes equals the edge ideal and the
// intersection is irredundant (dropping any component breaks equality).
bool verify_primary_decomposition(const edge_ideal_model& m,
                                  std::size_t pair_cap = default_pair_cap);

struct height_info {
    int height = 0;
    int dim = 0;
    bool unmixed = false;
};

// ht(I) = a and dim(S/I) = b, re-derived from the component sizes of the
// decomposition; unmixed exactly when b = 1.
height_info height_and_dim(int a, int b);

// mu(I(Gamma_P(Z_{p^m}))) = C(p^{m-1}-1, 2) + (p^{m-1}-1) * p^{m-1} * (p-1).
bignum zpm_mu(std::uint64_t p, int m);

} // namespace pigraph
