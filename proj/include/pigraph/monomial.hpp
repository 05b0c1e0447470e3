#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pigraph {

// Monomial in k[x_1..x_a, y_1..y_b]. Exponents are stored as one flat row,
// x-block first. The variable order used everywhere (printing, graded
// reverse lex, linear quotients) is x_1 > ... > x_a > y_1 > ... > y_b.
class monomial {
public:
    monomial(std::vector<int> x_exps, std::vector<int> y_exps);

    static monomial unit(int nx, int ny);
    // Degree-one monomial z_k where k is the flat variable position.
    static monomial variable(int nx, int ny, int flat_index);
    // Parses the canonical text form, e.g. "x1^2*x2*y3" or "1".
    static monomial parse(const std::string& text, int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return static_cast<int>(exps_.size()) - nx_; }
    int width() const { return static_cast<int>(exps_.size()); }

    int exponent(int flat_index) const { return exps_[flat_index]; }
    int x_exponent(int i) const { return exps_[i]; }        // 0-based
    int y_exponent(int t) const { return exps_[nx_ + t]; }  // 0-based

    int degree() const { return degree_; }
    int y_degree() const;
    int x_degree() const { return degree_ - y_degree(); }
    int max_x_exponent() const;
    bool squarefree() const;

    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const monomial& other) const {
        return nx_ == other.nx_ && exps_ == other.exps_;
    }

private:
    monomial() = default;
    friend monomial make_monomial_from_row(std::vector<int> row, int nx);

    std::vector<int> exps_;
    int nx_ = 0;
    int degree_ = 0;
};

// Internal factory used by the ideal arithmetic below.
monomial make_monomial_from_row(std::vector<int> row, int nx);

bool same_variables(const monomial& u, const monomial& v);

// True iff u divides v coordinatewise. Throws on mismatched block widths.
bool divides(const monomial& u, const monomial& v);

monomial operator*(const monomial& u, const monomial& v);
monomial lcm(const monomial& u, const monomial& v);
monomial gcd(const monomial& u, const monomial& v);

// u / gcd(u, m), the generator image under the colon by m.
monomial colon_quotient(const monomial& u, const monomial& m);

// Graded reverse lexicographic comparison with x_1 > ... > x_a > y_1 > ... > y_b.
bool grevlex_greater(const monomial& u, const monomial& v);

// Canonical text form: '*'-joined factors "x<i>"/"y<j>" with "^e" for e >= 2,
// variables in index order, the unit monomial rendered as "1".
std::string to_string(const monomial& m);

struct monomial_hash {
    std::size_t operator()(const monomial& m) const;
};

// Monomial ideal given by its minimal generating set, kept in descending
// graded reverse lex order. The zero ideal has no generators; the unit
// ideal is generated by the unit monomial.
class monomial_ideal {
public:
    monomial_ideal(int nx, int ny);  // zero ideal
    static monomial_ideal unit_ideal(int nx, int ny);
    static monomial_ideal from_generators(int nx, int ny, std::vector<monomial> gens);

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    const std::vector<monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }
    bool is_squarefree() const;

    // Common degree of the generators, or nullopt if degrees are mixed.
    std::optional<int> equigenerated_degree() const;

    // Ideal membership: some generator divides m.
    bool contains(const monomial& m) const;

private:
    int nx_;
    int ny_;
    std::vector<monomial> gens_;
};

inline constexpr std::size_t default_pair_cap = 1'000'000;
inline constexpr int max_power_exponent = 64;

// Removes every monomial strictly divisible by another and deduplicates;
// result sorted in descending graded reverse lex order.
std::vector<monomial> minimalize(std::vector<monomial> gens);

// Pairwise generator products, minimalized. Throws when the number of
// intermediate products would exceed pair_cap.
monomial_ideal product(const monomial_ideal& lhs, const monomial_ideal& rhs,
                       std::size_t pair_cap = default_pair_cap);

// Iterated product; n = 0 gives the unit ideal. Requires 0 <= n <= 64.
monomial_ideal power(const monomial_ideal& base, int n,
                     std::size_t pair_cap = default_pair_cap);

// Pairwise lcms of generators, minimalized.
monomial_ideal intersect(const monomial_ideal& lhs, const monomial_ideal& rhs,
                         std::size_t pair_cap = default_pair_cap);

monomial_ideal colon_by_monomial(const monomial_ideal& ideal, const monomial& m);

// Set equality of minimal generating sets. Throws on width mismatch.
bool equals(const monomial_ideal& lhs, const monomial_ideal& rhs);

} // namespace pigraph
