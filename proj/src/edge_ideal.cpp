#include "pigraph/edge_ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pigraph {

namespace {

void require_ab(int a, int b, int min_a) {
    if (a < min_a)
        throw std::invalid_argument("a must be >= " + std::to_string(min_a));
    if (b < 1) throw std::invalid_argument("b must be >= 1");
}

void require_power(int n, int min_n) {
    if (n < min_n)
        throw std::invalid_argument("power must be >= " + std::to_string(min_n));
    if (n > max_power_exponent)
        throw std::invalid_argument("power exceeds supported bound 64");
}

// Enumerates every row of `parts` entries in [0, cap] summing to `total`.
void for_each_composition(int total, int parts, int cap,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 0) {
        if (total == 0) fn({});
        return;
    }
    std::vector<int> row(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            if (remaining <= cap) {
                row[pos] = remaining;
                fn(row);
            }
            return;
        }
        for (int e = 0; e <= std::min(cap, remaining); ++e) {
            row[pos] = e;
            rec(pos + 1, remaining - e);
        }
    };
    rec(0, total);
}

} // namespace

edge_ideal_model edge_ideal(const split_graph& g, std::size_t gen_cap) {
    if (g.edges.size() > gen_cap)
        throw std::runtime_error("edge ideal has " + std::to_string(g.edges.size()) +
                                 " generators, exceeding the cap of " +
                                 std::to_string(gen_cap));
    std::vector<monomial> gens;
    gens.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        std::vector<int> row(g.a + g.b, 0);
        row[u] += 1;
        row[v] += 1;
        gens.push_back(make_monomial_from_row(std::move(row), g.a));
    }
    edge_ideal_model m;
    m.a = g.a;
    m.b = g.b;
    m.ideal = monomial_ideal::from_generators(g.a, g.b, std::move(gens));
    return m;
}

generator_pattern generator_pattern::of(const monomial& m, int n) {
    generator_pattern p;
    p.n = n;
    p.alpha.assign(m.exponents().begin(), m.exponents().begin() + m.nx());
    p.beta.assign(m.exponents().begin() + m.nx(), m.exponents().end());
    return p;
}

bool generator_pattern::valid() const {
    const int asum = std::accumulate(alpha.begin(), alpha.end(), 0);
    const int bsum = std::accumulate(beta.begin(), beta.end(), 0);
    if (asum + bsum != 2 * n) return false;
    if (bsum > n) return false;
    return std::all_of(alpha.begin(), alpha.end(),
                       [&](int e) { return e >= 0 && e <= n; });
}

bool is_minimal_power_generator(const monomial& m, int n) {
    return m.degree() == 2 * n && m.y_degree() <= n && m.max_x_exponent() <= n;
}

monomial_ideal closed_form_generators(int a, int b, int n, std::size_t gen_cap) {
    require_ab(a, b, 0);
    require_power(n, 1);
    if (a == 0) return monomial_ideal(0, b);

    const bignum expected = count_generators(a, b, n);
    if (expected > bignum(static_cast<unsigned long>(gen_cap)))
        throw std::runtime_error("closed-form enumeration of " + to_string(expected) +
                                 " generators exceeds the cap of " +
                                 std::to_string(gen_cap));

    std::vector<monomial> gens;
    for (int s = 0; s <= n; ++s) {
        for_each_composition(2 * n - s, a, n, [&](const std::vector<int>& alpha) {
            for_each_composition(s, b, s, [&](const std::vector<int>& beta) {
                std::vector<int> row = alpha;
                row.insert(row.end(), beta.begin(), beta.end());
                gens.push_back(make_monomial_from_row(std::move(row), a));
            });
        });
    }
    return monomial_ideal::from_generators(a, b, std::move(gens));
}

bignum count_generators(int a, int b, int n) {
    require_ab(a, b, 0);
    require_power(n, 1);
    if (a == 0) return 0;
    bignum total = 0;
    for (int s = 0; s <= n; ++s) {
        const bignum y_choices = binomial(s + b - 1, b - 1);
        const bignum unrestricted = binomial(2 * n - s + a - 1, a - 1);
        const bignum forbidden = bignum(a) * binomial(n - s + a - 2, a - 1);
        total += y_choices * (unrestricted - forbidden);
    }
    return total;
}

monomial_ideal complete_graph_power_generators(int a, int q, int ny) {
    require_ab(a, 1, 1);
    if (ny < 0) throw std::invalid_argument("ny must be >= 0");
    require_power(q, 0);
    if (q == 0) return monomial_ideal::unit_ideal(a, ny);

    std::vector<monomial> gens;
    for_each_composition(2 * q, a, q, [&](const std::vector<int>& delta) {
        std::vector<int> row = delta;
        row.resize(a + ny, 0);
        gens.push_back(make_monomial_from_row(std::move(row), a));
    });
    return monomial_ideal::from_generators(a, ny, std::move(gens));
}

monomial_ideal cross_power_generators(int a, int b, int s) {
    require_ab(a, b, 1);
    require_power(s, 0);
    if (s == 0) return monomial_ideal::unit_ideal(a, b);

    std::vector<monomial> gens;
    for_each_composition(s, a, s, [&](const std::vector<int>& gamma) {
        for_each_composition(s, b, s, [&](const std::vector<int>& beta) {
            std::vector<int> row = gamma;
            row.insert(row.end(), beta.begin(), beta.end());
            gens.push_back(make_monomial_from_row(std::move(row), a));
        });
    });
    return monomial_ideal::from_generators(a, b, std::move(gens));
}

bignum star_count(int b, int n) {
    require_ab(1, b, 1);
    require_power(n, 1);
    return binomial(n + b - 1, b - 1);
}

monomial_ideal prime_component::to_ideal(int a, int b) const {
    std::vector<monomial> gens;
    for (int i : x_vars) gens.push_back(monomial::variable(a, b, i - 1));
    for (int t : y_vars) gens.push_back(monomial::variable(a, b, a + t - 1));
    return monomial_ideal::from_generators(a, b, std::move(gens));
}

std::vector<std::string> prime_component::labels() const {
    std::vector<std::string> out;
    for (int i : x_vars) out.push_back("x" + std::to_string(i));
    for (int t : y_vars) out.push_back("y" + std::to_string(t));
    return out;
}

primary_decomposition minimal_primes(int a, int b) {
    require_ab(a, b, 1);
    primary_decomposition dec;

    prime_component p0;
    for (int i = 1; i <= a; ++i) p0.x_vars.push_back(i);
    dec.components.push_back(std::move(p0));

    for (int drop = 1; drop <= a; ++drop) {
        prime_component pi;
        for (int i = 1; i <= a; ++i)
            if (i != drop) pi.x_vars.push_back(i);
        for (int t = 1; t <= b; ++t) pi.y_vars.push_back(t);
        dec.components.push_back(std::move(pi));
    }
    return dec;
}

monomial_ideal intersect_components(const primary_decomposition& dec, int a, int b,
                                    std::size_t pair_cap) {
    if (dec.components.empty())
        throw std::invalid_argument("cannot intersect an empty component list");
    monomial_ideal acc = dec.components.front().to_ideal(a, b);
    for (std::size_t k = 1; k < dec.components.size(); ++k)
        acc = intersect(acc, dec.components[k].to_ideal(a, b), pair_cap);
    return acc;
}

bool verify_primary_decomposition(const edge_ideal_model& m, std::size_t pair_cap) {
    require_ab(m.a, m.b, 1);
    const primary_decomposition dec = minimal_primes(m.a, m.b);
    if (!equals(intersect_components(dec, m.a, m.b, pair_cap), m.ideal))
        return false;
    // Irredundant: no component can be dropped.
    for (std::size_t skip = 0; skip < dec.components.size(); ++skip) {
        primary_decomposition partial;
        for (std::size_t k = 0; k < dec.components.size(); ++k)
            if (k != skip) partial.components.push_back(dec.components[k]);
        if (equals(intersect_components(partial, m.a, m.b, pair_cap), m.ideal))
            return false;
    }
    return true;
}

height_info height_and_dim(int a, int b) {
    require_ab(a, b, 1);
    const primary_decomposition dec = minimal_primes(a, b);
    std::size_t min_size = dec.components.front().size();
    std::size_t max_size = min_size;
    for (const prime_component& c : dec.components) {
        min_size = std::min(min_size, c.size());
        max_size = std::max(max_size, c.size());
    }
    height_info info;
    info.height = static_cast<int>(min_size);
    info.dim = a + b - info.height;
    info.unmixed = min_size == max_size;
    if (info.height != a || info.dim != b || info.unmixed != (b == 1))
        throw std::logic_error("decomposition disagrees with ht = a, dim = b");
    return info;
}

bignum zpm_mu(std::uint64_t p, int m) {
    if (!is_prime_number(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    bignum t;  // p^{m-1}
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(m - 1));
    const bignum a = t - 1;
    const bignum b = t * bignum(static_cast<unsigned long>(p - 1));
    return a * (a - 1) / 2 + a * b;
}

} // namespace pigraph
