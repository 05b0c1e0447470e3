#include "pigraph/report.hpp"

#include <sstream>
#include <stdexcept>

#include "pigraph/json_io.hpp"
#include "pigraph/ring.hpp"
#include "pigraph/split_graph.hpp"

namespace pigraph {

using nlohmann::json;

bool check_set::all_pass() const {
    for (const auto& c : {oracle_equal, count_equal, degree_law, polymatroidal,
                          linear_quotients, betti0_equal})
        if (c.has_value() && !*c) return false;
    return true;
}

power_report build_power_report(const edge_ideal_model& model, int n,
                                const monomial_ideal* oracle_power,
                                const power_check_options& opts) {
    power_report r;
    r.a = model.a;
    r.b = model.b;
    r.n = n;
    r.generators = closed_form_generators(model.a, model.b, n, opts.pair_cap);
    r.mu_closed_form = count_generators(model.a, model.b, n);

    r.checks.count_equal = r.mu_closed_form == bignum(static_cast<unsigned long>(
                               r.generators.generator_count()));

    bool degree_law = true;
    for (const monomial& g : r.generators.generators())
        degree_law = degree_law && is_minimal_power_generator(g, n) &&
                     generator_pattern::of(g, n).valid();
    r.checks.degree_law = degree_law;

    if (oracle_power) {
        r.mu_oracle = oracle_power->generator_count();
        r.checks.oracle_equal = equals(r.generators, *oracle_power);
    }

    if (!r.generators.is_zero()) {
        if (opts.polymatroid)
            r.checks.polymatroidal =
                is_polymatroidal(r.generators, opts.exchange_cap).holds;
        if (opts.linquot) {
            linear_quotients_outcome outcome = linear_quotients(r.generators);
            r.checks.linear_quotients = outcome.ok();
            if (outcome.ok()) {
                const auto betti = betti_from_certificate(*outcome.certificate, 2 * n);
                r.checks.betti0_equal =
                    !betti.empty() && betti.front().beta == r.mu_closed_form;
                r.certificate = std::move(outcome.certificate);
            }
        }
    }
    return r;
}

json power_report_json(const power_report& r) {
    json out;
    out["a"] = r.a;
    out["b"] = r.b;
    out["n"] = r.n;
    out["mu_closed_form"] = to_string(r.mu_closed_form);
    if (r.mu_oracle) out["mu_oracle"] = std::to_string(*r.mu_oracle);
    out["generators"] = ideal_json(r.generators);
    if (r.certificate)
        out["certificate"] =
            certificate_json(*r.certificate, 2 * r.n,
                             r.checks.polymatroidal.value_or(false));
    json checks;
    const auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) checks[key] = *v;
    };
    put("oracle_equal", r.checks.oracle_equal);
    put("count_equal", r.checks.count_equal);
    put("degree_law", r.checks.degree_law);
    put("polymatroidal", r.checks.polymatroidal);
    put("linear_quotients", r.checks.linear_quotients);
    put("betti0_equal", r.checks.betti0_equal);
    out["checks"] = std::move(checks);
    return out;
}

bool table1_row::cell_ok(int k) const {
    return mu_formula[k] == bignum(static_cast<unsigned long>(expected[k])) &&
           mu_closed_set[k] == expected[k] && mu_oracle[k] == expected[k];
}

bool table1_row::row_ok() const {
    return cell_ok(0) && cell_ok(1) && cell_ok(2);
}

table1_expectations published_table1() {
    return {{4, 10, 20}, {15, 94, 378}};
}

namespace {

table1_row compute_row(const std::string& ring_text, std::uint64_t prime_gen,
                       const std::array<std::uint64_t, 3>& expected) {
    const ring_spec ring = parse_ring_spec(ring_text);
    const prime_ideal p =
        make_prime_ideal(ring, principal_ideal_members(ring, {{prime_gen}}));
    const split_graph g = build_graph(ring, p);
    const edge_ideal_model model = edge_ideal(g);

    table1_row row;
    row.ring_name = to_string(ring);
    row.ideal_name = "(" + to_string(p.generator) + ")";
    row.a = g.a;
    row.b = g.b;
    row.expected = expected;

    monomial_ideal oracle = monomial_ideal::unit_ideal(model.a, model.b);
    for (int n = 1; n <= 3; ++n) {
        oracle = product(oracle, model.ideal);
        row.mu_formula[n - 1] = count_generators(model.a, model.b, n);
        row.mu_closed_set[n - 1] =
            closed_form_generators(model.a, model.b, n).generator_count();
        row.mu_oracle[n - 1] = oracle.generator_count();
    }
    return row;
}

} // namespace

table1_result run_table1(const table1_expectations& expected) {
    table1_result out;
    out.rows.push_back(compute_row("Z6", 3, expected.z6));
    out.rows.push_back(compute_row("Z8", 2, expected.z8));
    out.all_match = true;
    for (const table1_row& row : out.rows) out.all_match = out.all_match && row.row_ok();
    return out;
}

json table1_json(const table1_result& t) {
    json rows = json::array();
    for (const table1_row& r : t.rows) {
        json row;
        row["ring"] = r.ring_name;
        row["prime_ideal"] = r.ideal_name;
        row["a"] = r.a;
        row["b"] = r.b;
        json cells = json::array();
        for (int k = 0; k < 3; ++k) {
            json cell;
            cell["n"] = k + 1;
            cell["mu_formula"] = to_string(r.mu_formula[k]);
            cell["mu_closed_set"] = std::to_string(r.mu_closed_set[k]);
            cell["mu_oracle"] = std::to_string(r.mu_oracle[k]);
            cell["expected"] = std::to_string(r.expected[k]);
            cell["match"] = r.cell_ok(k);
            cells.push_back(std::move(cell));
        }
        row["cells"] = std::move(cells);
        row["match"] = r.row_ok();
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = std::move(rows);
    out["status"] = t.all_match ? "PASS" : "FAIL";
    return out;
}

std::string table1_text(const table1_result& t) {
    std::ostringstream out;
    out << "Ring    Prime ideal P   a   b   n=1   n=2   n=3\n";
    for (const table1_row& r : t.rows) {
        out << r.ring_name;
        for (std::size_t k = r.ring_name.size(); k < 8; ++k) out << ' ';
        out << r.ideal_name;
        for (std::size_t k = r.ideal_name.size(); k < 16; ++k) out << ' ';
        out << r.a << "   " << r.b << "   ";
        for (int k = 0; k < 3; ++k) {
            std::string cell = to_string(r.mu_formula[k]);
            if (!r.cell_ok(k))
                cell += "(expected " + std::to_string(r.expected[k]) + ", set " +
                        std::to_string(r.mu_closed_set[k]) + ", oracle " +
                        std::to_string(r.mu_oracle[k]) + ")";
            out << cell;
            for (std::size_t c = cell.size(); c < 6; ++c) out << ' ';
        }
        out << '\n';
    }
    out << "status: " << (t.all_match ? "PASS" : "FAIL") << '\n';
    return out.str();
}

} // namespace pigraph
