#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pigraph/counting.hpp"
#include "pigraph/edge_ideal.hpp"
#include "pigraph/polymatroid.hpp"

namespace pigraph {

// Outcome flags for one power; unset means the check was not requested
// (or not applicable, e.g. exchange on the zero ideal).
struct check_set {
    std::optional<bool> oracle_equal;
    std::optional<bool> count_equal;
    std::optional<bool> degree_law;
    std::optional<bool> polymatroidal;
    std::optional<bool> linear_quotients;
    std::optional<bool> betti0_equal;

    bool all_pass() const;
};

struct power_report {
    int a = 0;
    int b = 0;
    int n = 0;
    bignum mu_closed_form;
    std::optional<std::uint64_t> mu_oracle;
    monomial_ideal generators{0, 0};
    std::optional<linear_quotients_certificate> certificate;
    check_set checks;
};

struct power_check_options {
    bool oracle = true;
    bool polymatroid = true;
    bool linquot = true;
    std::size_t pair_cap = default_pair_cap;
    std::size_t exchange_cap = default_exchange_cap;
};

// Runs the closed form for I^n, compares it against the supplied oracle
// power (pass nullptr to skip), and attaches the requested certificates.
power_report build_power_report(const edge_ideal_model& model, int n,
                                const monomial_ideal* oracle_power,
                                const power_check_options& opts);

// Counts serialized as decimal strings; generator lists in canonical order.
nlohmann::json power_report_json(const power_report& r);

struct table1_row {
    std::string ring_name;
    std::string ideal_name;
    int a = 0;
    int b = 0;
    std::array<bignum, 3> mu_formula;          // closed counting formula
    std::array<std::uint64_t, 3> mu_closed_set{};  // enumerated generating set
    std::array<std::uint64_t, 3> mu_oracle{};      // brute-force power oracle
    std::array<std::uint64_t, 3> expected{};       // published values

    bool cell_ok(int k) const;
    bool row_ok() const;
};

struct table1_result {
    std::vector<table1_row> rows;
    bool all_match = false;
};

struct table1_expectations {
    std::array<std::uint64_t, 3> z6;
    std::array<std::uint64_t, 3> z8;
};

// Published generator counts for (Z_6, (3)) and (Z_8, (2)), n = 1, 2, 3.
table1_expectations published_table1();

// Recomputes both rows from scratch through the full ring -> graph ->
// ideal -> power pipeline and diffs them against the expectations.
table1_result run_table1(const table1_expectations& expected = published_table1());

nlohmann::json table1_json(const table1_result& t);
std::string table1_text(const table1_result& t);

} // namespace pigraph
