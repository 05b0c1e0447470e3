#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pigraph/counting.hpp"
#include "pigraph/monomial.hpp"

namespace pigraph {

struct exchange_counterexample {
    monomial u;
    monomial v;
    int position = 0;  // flat variable index p with deg_p(u) > deg_p(v)
};

struct exchange_report {
    bool holds = false;
    std::optional<exchange_counterexample> counterexample;
};

inline constexpr std::size_t default_exchange_cap = 5000;

// Exhaustive symmetric-exchange check on an equigenerated nonzero ideal:
// for all u, v in G(I) and every p with deg_p(u) > deg_p(v) there must be a
// q with deg_q(u) < deg_q(v) and z_q * u / z_p in G(I). Returns the first
// counterexample found.
exchange_report is_polymatroidal(const monomial_ideal& ideal,
                                 std::size_t gen_cap = default_exchange_cap);

// Witness that u_1, ..., u_m (descending graded reverse lex) has linear
// quotients: r_j counts the variables minimally generating
// (u_1, ..., u_{j-1}) : u_j; r_1 = 0.
struct linear_quotients_certificate {
    std::vector<monomial> order;
    std::vector<int> colon_variable_counts;
};

struct linear_quotients_outcome {
    std::optional<linear_quotients_certificate> certificate;
    std::optional<std::size_t> failed_index;  // 0-based position in the order

    bool ok() const { return certificate.has_value(); }
};

// Runs the colon checks in descending graded reverse lex order (variable
// order x_1 > ... > x_a > y_1 > ... > y_b). A colon that is not generated
// by variables is reported via failed_index, never ignored.
linear_quotients_outcome linear_quotients(const monomial_ideal& ideal);

struct betti_entry {
    int i = 0;      // homological degree
    int shift = 0;  // gen_degree + i; equal shifts per i certify linearity
    bignum beta;
};

// Graded Betti numbers from a linear-quotients certificate:
// beta_i = sum_j C(r_j, i), with every shift at homological degree i equal
// to gen_degree + i.
std::vector<betti_entry> betti_from_certificate(
    const linear_quotients_certificate& cert, int gen_degree);

struct regularity_result {
    int reg = 0;
    bool certified = false;
};

// Builds the closed-form generators of I^n and certifies reg(I^n) = 2n via
// linear quotients; certified = false when the fixed order fails.
regularity_result regularity_report(int a, int b, int n,
                                    std::size_t gen_cap = default_pair_cap);

} // namespace pigraph
