#include "pigraph/polymatroid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pigraph/edge_ideal.hpp"

namespace pigraph {

namespace {

struct row_hash {
    std::size_t operator()(const std::vector<int>& row) const {
        std::size_t h = 1469598103934665603ull;
        for (int e : row) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

void require_equigenerated_nonzero(const monomial_ideal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("the zero ideal has no generator degree");
    if (!ideal.equigenerated_degree())
        throw std::invalid_argument("ideal must be generated in a single degree");
}

} // namespace

exchange_report is_polymatroidal(const monomial_ideal& ideal, std::size_t gen_cap) {
    require_equigenerated_nonzero(ideal);
    if (ideal.generator_count() > gen_cap)
        throw std::runtime_error("exchange check capped at " + std::to_string(gen_cap) +
                                 " generators (got " +
                                 std::to_string(ideal.generator_count()) + ")");

    std::unordered_set<std::vector<int>, row_hash> gen_rows;
    for (const monomial& g : ideal.generators()) gen_rows.insert(g.exponents());

    const int w = ideal.nx() + ideal.ny();
    std::vector<int> scratch;
    for (const monomial& u : ideal.generators()) {
        for (const monomial& v : ideal.generators()) {
            if (u == v) continue;
            for (int p = 0; p < w; ++p) {
                if (u.exponent(p) <= v.exponent(p)) continue;
                bool exchanged = false;
                scratch = u.exponents();
                scratch[p] -= 1;
                for (int q = 0; q < w && !exchanged; ++q) {
                    if (u.exponent(q) >= v.exponent(q)) continue;
                    scratch[q] += 1;
                    exchanged = gen_rows.count(scratch) > 0;
                    scratch[q] -= 1;
                }
                if (!exchanged)
                    return {false, exchange_counterexample{u, v, p}};
            }
        }
    }
    return {true, std::nullopt};
}

linear_quotients_outcome linear_quotients(const monomial_ideal& ideal) {
    require_equigenerated_nonzero(ideal);
    const std::vector<monomial>& gens = ideal.generators();  // descending grevlex
    const int w = ideal.nx() + ideal.ny();

    linear_quotients_certificate cert;
    cert.order = gens;
    cert.colon_variable_counts.assign(gens.size(), 0);

    std::vector<std::vector<int>> quotients;
    for (std::size_t j = 1; j < gens.size(); ++j) {
        quotients.clear();
        quotients.reserve(j);
        std::vector<char> is_colon_var(w, 0);
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<int> d(w);
            int deg = 0, last_pos = 0;
            for (int k = 0; k < w; ++k) {
                d[k] = std::max(gens[i].exponent(k) - gens[j].exponent(k), 0);
                if (d[k] > 0) {
                    deg += d[k];
                    last_pos = k;
                }
            }
            if (deg == 1) is_colon_var[last_pos] = 1;
            quotients.push_back(std::move(d));
        }
        // The colon is variable-generated iff every quotient is a multiple
        // of one of its degree-one members.
        for (const std::vector<int>& d : quotients) {
            bool dominated = false;
            for (int k = 0; k < w && !dominated; ++k)
                dominated = d[k] >= 1 && is_colon_var[k];
            if (!dominated)
                return {std::nullopt, j};
        }
        cert.colon_variable_counts[j] =
            static_cast<int>(std::count(is_colon_var.begin(), is_colon_var.end(), 1));
    }
    return {std::move(cert), std::nullopt};
}

std::vector<betti_entry> betti_from_certificate(
    const linear_quotients_certificate& cert, int gen_degree) {
    int max_r = 0;
    for (int r : cert.colon_variable_counts) max_r = std::max(max_r, r);

    std::vector<betti_entry> out;
    for (int i = 0; i <= max_r; ++i) {
        betti_entry e;
        e.i = i;
        e.shift = gen_degree + i;
        e.beta = 0;
        for (int r : cert.colon_variable_counts) e.beta += binomial(r, i);
        out.push_back(std::move(e));
    }
    return out;
}

regularity_result regularity_report(int a, int b, int n, std::size_t gen_cap) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const monomial_ideal ideal = closed_form_generators(a, b, n, gen_cap);
    const linear_quotients_outcome outcome = linear_quotients(ideal);
    const bool degrees_ok = ideal.equigenerated_degree() == std::optional<int>(2 * n);
    return {2 * n, outcome.ok() && degrees_ok};
}

} // namespace pigraph
