// pigraph: prime ideal graphs of finite commutative rings, their edge
// ideals, and the closed-form data of every power, cross-checked against a
// brute-force monomial engine.
//
//   pigraph analyze --ring Z8 --prime 2 --max-power 3 --checks all
//   pigraph analyze --ab 2,6 --max-power 1
//   pigraph table1
//   pigraph sweep --family zpm --max-p 3 --max-m 3

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pigraph/edge_ideal.hpp"
#include "pigraph/json_io.hpp"
#include "pigraph/polymatroid.hpp"
#include "pigraph/report.hpp"
#include "pigraph/ring.hpp"
#include "pigraph/split_graph.hpp"

using namespace pigraph;
using nlohmann::json;

namespace {

struct check_flags {
    bool oracle = false;
    bool polymatroid = false;
    bool linquot = false;
    bool primary = false;
    bool covers = false;
};

check_flags parse_checks(const std::string& csv) {
    check_flags f;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") f = {true, true, true, true, true};
        else if (tok == "oracle") f.oracle = true;
        else if (tok == "polymatroid") f.polymatroid = true;
        else if (tok == "linquot") f.linquot = true;
        else if (tok == "primary") f.primary = true;
        else if (tok == "covers") f.covers = true;
        else if (!tok.empty())
            throw CLI::ValidationError("--checks", "unknown check '" + tok + "'");
    }
    return f;
}

ring_element parse_element(const std::string& text, const ring_spec& r) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    ring_element e;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')')
            throw std::invalid_argument("unbalanced tuple '" + text + "'");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) e.coords.push_back(std::stoull(tok));
    } else {
        e.coords.push_back(std::stoull(s));
    }
    if (!element_in_ring(r, e))
        throw std::invalid_argument("element " + text + " is not in " + to_string(r));
    return e;
}

// Splits "0,3" or "(0,0),(1,0)" at the commas outside parentheses.
std::vector<std::string> split_element_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct analyze_options {
    std::string ring_text;
    std::string prime_gen;
    std::string prime_set;
    std::string ab_text;
    int max_power = 2;
    std::string checks_csv = "all";
    bool as_json = false;
    std::size_t cap_gens = default_pair_cap;
    std::uint64_t cap_ring = default_ring_order_cap;
};

struct prime_analysis {
    std::optional<prime_ideal> prime;  // absent for abstract runs
    split_graph graph;
    edge_ideal_model model;
    std::optional<bool> covers_match;
    std::optional<bool> primary_ok;
    std::optional<height_info> height;
    std::vector<power_report> powers;

    bool pass() const {
        bool ok = covers_match.value_or(true) && primary_ok.value_or(true);
        for (const power_report& p : powers) ok = ok && p.checks.all_pass();
        return ok;
    }
};

prime_analysis analyze_one(const split_graph& g, std::optional<prime_ideal> prime,
                           const analyze_options& opt, const check_flags& checks) {
    prime_analysis out;
    out.prime = std::move(prime);
    out.graph = g;
    out.model = edge_ideal(g, opt.cap_gens);

    if (checks.covers) {
        if (g.a == 0)
            std::cerr << "note: covers check skipped, edgeless graph has only "
                         "the empty cover\n";
        else if (g.vertex_count() <= default_cover_vertex_cap)
            out.covers_match = minimal_vertex_covers_closed_form(g) ==
                               minimal_vertex_covers_bruteforce(g);
        else
            std::cerr << "note: covers check skipped, graph has "
                      << g.vertex_count() << " > " << default_cover_vertex_cap
                      << " vertices\n";
    }
    if (checks.primary && out.model.a >= 1)
        out.primary_ok = verify_primary_decomposition(out.model, opt.cap_gens);
    if (out.model.a >= 1) out.height = height_and_dim(out.model.a, out.model.b);

    power_check_options pco;
    pco.polymatroid = checks.polymatroid;
    pco.linquot = checks.linquot;
    pco.pair_cap = opt.cap_gens;

    monomial_ideal oracle = monomial_ideal::unit_ideal(out.model.a, out.model.b);
    for (int n = 1; n <= opt.max_power; ++n) {
        const monomial_ideal* oracle_ptr = nullptr;
        if (checks.oracle) {
            oracle = product(oracle, out.model.ideal, opt.cap_gens);
            oracle_ptr = &oracle;
        }
        out.powers.push_back(build_power_report(out.model, n, oracle_ptr, pco));
    }
    return out;
}

json analysis_json(const prime_analysis& a) {
    json out;
    if (a.prime) {
        json p;
        p["generator"] = to_string(a.prime->generator);
        p["members"] = json::array();
        for (const ring_element& e : a.prime->members)
            p["members"].push_back(to_string(e));
        p["size"] = std::to_string(a.prime->size());
        p["q"] = std::to_string(a.prime->quotient_order);
        out["prime"] = std::move(p);
    }
    out["graph"] = graph_json(a.graph);
    if (a.covers_match.has_value()) {
        json covers;
        covers["closed_form"] = json::array();
        for (const vertex_cover& c : minimal_vertex_covers_closed_form(a.graph)) {
            json members = json::array();
            for (int v : c.members) members.push_back(a.graph.labels[v]);
            covers["closed_form"].push_back(std::move(members));
        }
        covers["bruteforce_match"] = *a.covers_match;
        out["covers"] = std::move(covers);
    }
    if (a.model.a >= 1) {
        json primary;
        primary["components"] = decomposition_json(minimal_primes(a.model.a, a.model.b));
        if (a.primary_ok.has_value()) primary["verified"] = *a.primary_ok;
        out["primary"] = std::move(primary);
        if (a.height) {
            json h;
            h["ht"] = a.height->height;
            h["dim"] = a.height->dim;
            h["unmixed"] = a.height->unmixed;
            out["height"] = std::move(h);
        }
    }
    out["powers"] = json::array();
    for (const power_report& p : a.powers) out["powers"].push_back(power_report_json(p));
    out["pass"] = a.pass();
    return out;
}

void print_checks_line(const check_set& c) {
    const auto flag = [](const char* name, const std::optional<bool>& v) {
        if (!v) return std::string();
        return std::string(" ") + name + (*v ? "=ok" : "=FAIL");
    };
    std::cout << flag("count", c.count_equal) << flag("degree", c.degree_law)
              << flag("oracle", c.oracle_equal) << flag("polymatroidal", c.polymatroidal)
              << flag("linquot", c.linear_quotients) << flag("betti0", c.betti0_equal);
}

void print_analysis_text(const prime_analysis& a) {
    if (a.prime) {
        std::cout << "prime ideal P = (" << to_string(a.prime->generator) << ") = {";
        for (std::size_t i = 0; i < a.prime->members.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(a.prime->members[i]);
        std::cout << "}, |P| = " << a.prime->size() << ", q = " << a.prime->quotient_order
                  << '\n';
    }
    std::cout << "graph: complete split graph with a = " << a.graph.a
              << " (clique), b = " << a.graph.b << " (independent), "
              << a.graph.edges.size() << " edges, clique number "
              << clique_number(a.graph) << '\n';
    if (a.graph.vertex_count() <= 64 && !a.graph.edges.empty())
        std::cout << "adjacency:\n" << graph_adjacency_text(a.graph);

    if (a.graph.a >= 1) {
        const auto covers = minimal_vertex_covers_closed_form(a.graph);
        std::cout << "minimal vertex covers (" << covers.size() << "):";
        for (const vertex_cover& c : covers) {
            std::cout << " {";
            for (std::size_t i = 0; i < c.members.size(); ++i)
                std::cout << (i ? "," : "") << a.graph.labels[c.members[i]];
            std::cout << "}";
        }
        std::cout << '\n';
    }
    if (a.covers_match.has_value())
        std::cout << "covers vs brute force: " << (*a.covers_match ? "ok" : "FAIL")
                  << '\n';

    if (a.model.a >= 1) {
        std::cout << "primary decomposition:";
        for (const prime_component& c : minimal_primes(a.model.a, a.model.b).components) {
            std::cout << " (";
            const auto labels = c.labels();
            for (std::size_t i = 0; i < labels.size(); ++i)
                std::cout << (i ? "," : "") << labels[i];
            std::cout << ")";
        }
        std::cout << '\n';
        if (a.primary_ok.has_value())
            std::cout << "decomposition verified: " << (*a.primary_ok ? "ok" : "FAIL")
                      << '\n';
        if (a.height)
            std::cout << "height " << a.height->height << ", dim " << a.height->dim
                      << ", unmixed: " << (a.height->unmixed ? "yes" : "no") << '\n';
    } else {
        std::cout << "edge ideal is zero (a = 0)\n";
    }

    std::cout << "powers:\n";
    for (const power_report& p : a.powers) {
        std::cout << "  n=" << p.n << "  mu=" << to_string(p.mu_closed_form);
        if (p.mu_oracle) std::cout << "  mu_oracle=" << *p.mu_oracle;
        print_checks_line(p.checks);
        std::cout << '\n';
    }
}

int run_analyze(const analyze_options& opt) {
    if (opt.ring_text.empty() == opt.ab_text.empty())
        throw CLI::ValidationError("analyze", "give exactly one of --ring or --ab");
    if (opt.max_power < 1)
        throw CLI::ValidationError("--max-power", "must be >= 1");
    const check_flags checks = parse_checks(opt.checks_csv);

    std::vector<prime_analysis> analyses;
    json doc;

    if (!opt.ring_text.empty()) {
        const ring_spec ring = parse_ring_spec(opt.ring_text, opt.cap_ring);
        std::vector<prime_ideal> primes;
        if (!opt.prime_gen.empty()) {
            primes.push_back(make_prime_ideal(
                ring, principal_ideal_members(ring, parse_element(opt.prime_gen, ring))));
        } else if (!opt.prime_set.empty()) {
            std::vector<ring_element> members;
            for (const std::string& tok : split_element_list(opt.prime_set))
                members.push_back(parse_element(tok, ring));
            primes.push_back(make_prime_ideal(ring, std::move(members)));
        } else {
            primes = prime_ideals(ring);
        }

        json ring_doc;
        ring_doc["spec"] = to_string(ring);
        ring_doc["order"] = std::to_string(ring.order());
        ring_doc["factors"] = ring.factors();
        doc["ring"] = std::move(ring_doc);

        if (!opt.as_json)
            std::cout << "ring: " << to_string(ring) << " (order " << ring.order()
                      << ", " << primes.size() << " prime ideal"
                      << (primes.size() == 1 ? "" : "s") << ")\n";

        for (prime_ideal& p : primes) {
            const split_graph g = build_graph(ring, p);
            analyses.push_back(analyze_one(g, std::move(p), opt, checks));
        }
    } else {
        int a = -1, b = -1;
        if (std::sscanf(opt.ab_text.c_str(), "%d,%d", &a, &b) != 2)
            throw CLI::ValidationError("--ab", "expected 'a,b'");
        const split_graph g = abstract_split_graph(a, b);
        if (!opt.as_json)
            std::cout << "abstract split graph, a = " << a << ", b = " << b << "\n";
        analyses.push_back(analyze_one(g, std::nullopt, opt, checks));
    }

    bool pass = true;
    for (const prime_analysis& a : analyses) pass = pass && a.pass();

    if (opt.as_json) {
        doc["analyses"] = json::array();
        for (const prime_analysis& a : analyses)
            doc["analyses"].push_back(analysis_json(a));
        doc["pass"] = pass;
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const prime_analysis& a : analyses) {
            print_analysis_text(a);
            std::cout << '\n';
        }
        std::cout << "RESULT: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

int run_table1_cmd(bool as_json) {
    const table1_result t = run_table1();
    if (as_json) std::cout << table1_json(t).dump(2) << '\n';
    else std::cout << table1_text(t);
    return t.all_match ? 0 : 1;
}

struct sweep_options {
    std::string family;
    std::uint64_t max_p = 3;
    int max_m = 3;
    std::uint64_t min_n = 2;
    std::uint64_t max_n = 16;
    int max_power = 1;
    bool as_json = false;
    std::uint64_t cap_ring = default_ring_order_cap;
};

struct sweep_row {
    std::string ring_name;
    std::string ideal_name;
    std::uint64_t a = 0, b = 0, q = 0;
    std::vector<bignum> mu;  // n = 1 .. max_power
    std::optional<bool> zpm_check;
    bool structure_check = false;

    bool pass() const { return structure_check && zpm_check.value_or(true); }
};

// a and b from the prime ideal alone; powers via the counting formula, so
// sweeps never build ideals and scale to the ring cap.
sweep_row sweep_ring(const ring_spec& ring, const prime_ideal& p, int max_power,
                     std::optional<std::pair<std::uint64_t, int>> zpm) {
    sweep_row row;
    row.ring_name = to_string(ring);
    row.ideal_name = "(" + to_string(p.generator) + ")";
    row.a = p.size() - 1;
    row.b = ring.order() - p.size();
    row.q = p.quotient_order;
    row.structure_check = ring.order() == p.size() * p.quotient_order &&
                       row.b == (row.a + 1) * (row.q - 1);
    for (int n = 1; n <= max_power; ++n)
        row.mu.push_back(count_generators(static_cast<int>(row.a),
                                          static_cast<int>(row.b), n));
    if (zpm)
        row.zpm_check = zpm_mu(zpm->first, zpm->second) ==
                        count_generators(static_cast<int>(row.a),
                                         static_cast<int>(row.b), 1);
    return row;
}

// n = p^m with m >= 2, if it is such a power.
std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t n) {
    const auto ps = prime_divisors(n);
    if (ps.size() != 1) return std::nullopt;
    const std::uint64_t p = ps[0];
    int m = 0;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1 || m < 2) return std::nullopt;
    return std::make_pair(p, m);
}

int run_sweep(const sweep_options& opt) {
    if (opt.family != "zpm" && opt.family != "zn")
        throw CLI::ValidationError("--family", "expected 'zpm' or 'zn'");
    if (opt.max_power < 1)
        throw CLI::ValidationError("--max-power", "must be >= 1");

    std::vector<sweep_row> rows;
    if (opt.family == "zpm") {
        for (std::uint64_t p = 2; p <= opt.max_p; ++p) {
            if (!is_prime_number(p)) continue;
            std::uint64_t order = p;
            for (int m = 2; m <= opt.max_m; ++m) {
                if (order > opt.cap_ring / p) break;
                order *= p;
                const ring_spec ring({order}, opt.cap_ring);
                for (const prime_ideal& ideal : prime_ideals(ring))
                    rows.push_back(sweep_ring(ring, ideal, opt.max_power,
                                              std::make_pair(p, m)));
            }
        }
    } else {
        for (std::uint64_t n = std::max<std::uint64_t>(2, opt.min_n); n <= opt.max_n; ++n) {
            if (n > opt.cap_ring) break;
            const ring_spec ring({n}, opt.cap_ring);
            for (const prime_ideal& ideal : prime_ideals(ring))
                rows.push_back(sweep_ring(ring, ideal, opt.max_power, as_prime_power(n)));
        }
    }

    bool pass = true;
    for (const sweep_row& r : rows) pass = pass && r.pass();

    if (opt.as_json) {
        json doc;
        doc["rows"] = json::array();
        for (const sweep_row& r : rows) {
            json row;
            row["ring"] = r.ring_name;
            row["prime_ideal"] = r.ideal_name;
            row["a"] = r.a;
            row["b"] = r.b;
            row["q"] = r.q;
            row["mu"] = json::array();
            for (const bignum& v : r.mu) row["mu"].push_back(to_string(v));
            row["structure_check"] = r.structure_check;
            if (r.zpm_check.has_value()) row["zpm_check"] = *r.zpm_check;
            row["pass"] = r.pass();
            doc["rows"].push_back(std::move(row));
        }
        doc["pass"] = pass;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "ring      P       a      b      q";
        for (int n = 1; n <= opt.max_power; ++n) std::cout << "  mu(I^" << n << ")";
        std::cout << "  checks\n";
        for (const sweep_row& r : rows) {
            std::cout << r.ring_name;
            for (std::size_t k = r.ring_name.size(); k < 10; ++k) std::cout << ' ';
            std::cout << r.ideal_name;
            for (std::size_t k = r.ideal_name.size(); k < 8; ++k) std::cout << ' ';
            std::string cell = std::to_string(r.a);
            std::cout << cell;
            for (std::size_t k = cell.size(); k < 7; ++k) std::cout << ' ';
            cell = std::to_string(r.b);
            std::cout << cell;
            for (std::size_t k = cell.size(); k < 7; ++k) std::cout << ' ';
            cell = std::to_string(r.q);
            std::cout << cell;
            for (std::size_t k = cell.size(); k < 3; ++k) std::cout << ' ';
            for (const bignum& v : r.mu) std::cout << "  " << to_string(v);
            std::cout << "  " << (r.structure_check ? "structure=ok" : "structure=FAIL");
            if (r.zpm_check.has_value())
                std::cout << (*r.zpm_check ? " zpm=ok" : " zpm=FAIL");
            std::cout << '\n';
        }
        std::cout << "RESULT: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime ideal graphs and powers of their edge ideals"};
    app.require_subcommand(1);

    analyze_options aopt;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "analyze one ring/prime pair, all primes of a ring, or an abstract (a,b)");
    analyze->add_option("--ring", aopt.ring_text, "ring spec, e.g. Z6 or Z2xZ3");
    analyze->add_option("--prime", aopt.prime_gen,
                        "prime ideal by generator, e.g. 3 or (1,0)");
    analyze->add_option("--prime-set", aopt.prime_set,
                        "prime ideal by explicit member list, e.g. 0,3");
    analyze->add_option("--ab", aopt.ab_text, "abstract split parameters a,b");
    analyze->add_option("--max-power", aopt.max_power, "largest power n to analyze");
    analyze->add_option("--checks", aopt.checks_csv,
                        "csv of oracle,polymatroid,linquot,primary,covers or 'all'");
    analyze->add_flag("--json", aopt.as_json, "emit one JSON document");
    analyze->add_option("--cap-gens", aopt.cap_gens,
                        "cap on intermediate products / enumerated generators");
    analyze->add_option("--cap-ring", aopt.cap_ring, "cap on the ring order");

    bool table1_json_flag = false;
    CLI::App* table1 = app.add_subcommand(
        "table1", "recompute the published generator counts and diff them");
    table1->add_flag("--json", table1_json_flag, "emit one JSON document");

    sweep_options sopt;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "sweep a ring family and tabulate (a, b) and generator counts");
    sweep->add_option("--family", sopt.family, "zpm or zn")->required();
    sweep->add_option("--max-p", sopt.max_p, "zpm: largest prime p");
    sweep->add_option("--max-m", sopt.max_m, "zpm: largest exponent m");
    sweep->add_option("--min-n", sopt.min_n, "zn: smallest modulus");
    sweep->add_option("--max-n", sopt.max_n, "zn: largest modulus");
    sweep->add_option("--max-power", sopt.max_power, "largest power n to count");
    sweep->add_flag("--json", sopt.as_json, "emit one JSON document");
    sweep->add_option("--cap-ring", sopt.cap_ring, "cap on the ring order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(aopt);
        if (table1->parsed()) return run_table1_cmd(table1_json_flag);
        if (sweep->parsed()) return run_sweep(sopt);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
