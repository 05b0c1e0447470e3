#include "pigraph/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pigraph {

namespace {

int checked_width(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
    return n;
}

void require_same_variables(const monomial& u, const monomial& v) {
    if (!same_variables(u, v))
        throw std::invalid_argument("monomials live in different variable blocks");
}

} // namespace

monomial::monomial(std::vector<int> x_exps, std::vector<int> y_exps) {
    nx_ = static_cast<int>(x_exps.size());
    exps_ = std::move(x_exps);
    exps_.insert(exps_.end(), y_exps.begin(), y_exps.end());
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

monomial make_monomial_from_row(std::vector<int> row, int nx) {
    monomial m;
    m.nx_ = nx;
    m.degree_ = std::accumulate(row.begin(), row.end(), 0);
    m.exps_ = std::move(row);
    return m;
}

monomial monomial::unit(int nx, int ny) {
    return monomial(std::vector<int>(checked_width(nx, "nx"), 0),
                    std::vector<int>(checked_width(ny, "ny"), 0));
}

monomial monomial::variable(int nx, int ny, int flat_index) {
    if (flat_index < 0 || flat_index >= nx + ny)
        throw std::invalid_argument("variable index out of range");
    std::vector<int> row(nx + ny, 0);
    row[flat_index] = 1;
    return make_monomial_from_row(std::move(row), nx);
}

monomial monomial::parse(const std::string& text, int nx, int ny) {
    std::vector<int> row(checked_width(nx, "nx") + checked_width(ny, "ny"), 0);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty monomial text");
    if (s == "1") return make_monomial_from_row(std::move(row), nx);

    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw std::invalid_argument("bad monomial factor: '" + tok + "'");
        const bool is_x = tok[0] == 'x';
        std::size_t caret = tok.find('^');
        const std::string idx_str = tok.substr(1, caret == std::string::npos
                                                      ? std::string::npos
                                                      : caret - 1);
        int idx = 0, e = 1;
        try {
            idx = std::stoi(idx_str);
            if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad monomial factor: '" + tok + "'");
        }
        if (e < 1) throw std::invalid_argument("bad exponent in '" + tok + "'");
        const int block = is_x ? nx : ny;
        if (idx < 1 || idx > block)
            throw std::invalid_argument("variable index out of range in '" + tok + "'");
        row[(is_x ? 0 : nx) + idx - 1] += e;
    }
    return make_monomial_from_row(std::move(row), nx);
}

int monomial::y_degree() const {
    int s = 0;
    for (std::size_t k = nx_; k < exps_.size(); ++k) s += exps_[k];
    return s;
}

int monomial::max_x_exponent() const {
    int m = 0;
    for (int i = 0; i < nx_; ++i) m = std::max(m, exps_[i]);
    return m;
}

bool monomial::squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool same_variables(const monomial& u, const monomial& v) {
    return u.nx() == v.nx() && u.width() == v.width();
}

bool divides(const monomial& u, const monomial& v) {
    require_same_variables(u, v);
    for (int k = 0; k < u.width(); ++k)
        if (u.exponent(k) > v.exponent(k)) return false;
    return true;
}

monomial operator*(const monomial& u, const monomial& v) {
    require_same_variables(u, v);
    std::vector<int> row(u.exponents());
    for (int k = 0; k < u.width(); ++k) row[k] += v.exponent(k);
    return make_monomial_from_row(std::move(row), u.nx());
}

monomial lcm(const monomial& u, const monomial& v) {
    require_same_variables(u, v);
    std::vector<int> row(u.exponents());
    for (int k = 0; k < u.width(); ++k) row[k] = std::max(row[k], v.exponent(k));
    return make_monomial_from_row(std::move(row), u.nx());
}

monomial gcd(const monomial& u, const monomial& v) {
    require_same_variables(u, v);
    std::vector<int> row(u.exponents());
    for (int k = 0; k < u.width(); ++k) row[k] = std::min(row[k], v.exponent(k));
    return make_monomial_from_row(std::move(row), u.nx());
}

monomial colon_quotient(const monomial& u, const monomial& m) {
    require_same_variables(u, m);
    std::vector<int> row(u.exponents());
    for (int k = 0; k < u.width(); ++k) row[k] = std::max(row[k] - m.exponent(k), 0);
    return make_monomial_from_row(std::move(row), u.nx());
}

bool grevlex_greater(const monomial& u, const monomial& v) {
    require_same_variables(u, v);
    if (u.degree() != v.degree()) return u.degree() > v.degree();
    for (int k = u.width() - 1; k >= 0; --k)
        if (u.exponent(k) != v.exponent(k)) return u.exponent(k) < v.exponent(k);
    return false;
}

std::string to_string(const monomial& m) {
    if (m.degree() == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < m.width(); ++k) {
        const int e = m.exponent(k);
        if (e == 0) continue;
        if (!first) out << '*';
        first = false;
        if (k < m.nx())
            out << 'x' << (k + 1);
        else
            out << 'y' << (k - m.nx() + 1);
        if (e >= 2) out << '^' << e;
    }
    return out.str();
}

std::size_t monomial_hash::operator()(const monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

monomial_ideal::monomial_ideal(int nx, int ny)
    : nx_(checked_width(nx, "nx")), ny_(checked_width(ny, "ny")) {}

monomial_ideal monomial_ideal::unit_ideal(int nx, int ny) {
    monomial_ideal out(nx, ny);
    out.gens_.push_back(monomial::unit(nx, ny));
    return out;
}

monomial_ideal monomial_ideal::from_generators(int nx, int ny,
                                               std::vector<monomial> gens) {
    monomial_ideal out(nx, ny);
    for (const monomial& g : gens)
        if (g.nx() != nx || g.width() != nx + ny)
            throw std::invalid_argument("generator width does not match the ideal");
    out.gens_ = minimalize(std::move(gens));
    return out;
}

bool monomial_ideal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const monomial& g) { return g.squarefree(); });
}

std::optional<int> monomial_ideal::equigenerated_degree() const {
    if (gens_.empty()) return std::nullopt;
    const int d = gens_.front().degree();
    for (const monomial& g : gens_)
        if (g.degree() != d) return std::nullopt;
    return d;
}

bool monomial_ideal::contains(const monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const monomial& g) { return divides(g, m); });
}

std::vector<monomial> minimalize(std::vector<monomial> gens) {
    if (gens.empty()) return gens;
    // Degree-ascending pass: a monomial can only be divisible by one of
    // smaller degree (strictly) or an equal one (dedup handles those).
    std::sort(gens.begin(), gens.end(), [](const monomial& u, const monomial& v) {
        if (u.degree() != v.degree()) return u.degree() < v.degree();
        return u.exponents() < v.exponents();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<monomial> kept;
    kept.reserve(gens.size());
    std::size_t lower_degree_end = 0;  // kept[0..lower_degree_end) have smaller degree
    int current_degree = gens.front().degree();
    for (monomial& g : gens) {
        if (g.degree() != current_degree) {
            current_degree = g.degree();
            lower_degree_end = kept.size();
        }
        bool redundant = false;
        for (std::size_t k = 0; k < lower_degree_end && !redundant; ++k)
            redundant = divides(kept[k], g);
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), grevlex_greater);
    return kept;
}

monomial_ideal product(const monomial_ideal& lhs, const monomial_ideal& rhs,
                       std::size_t pair_cap) {
    if (lhs.nx() != rhs.nx() || lhs.ny() != rhs.ny())
        throw std::invalid_argument("ideal widths do not match");
    const std::size_t pairs = lhs.generator_count() * rhs.generator_count();
    if (pairs > pair_cap)
        throw std::runtime_error("product cap exceeded: " + std::to_string(pairs) +
                                 " intermediate products (cap " +
                                 std::to_string(pair_cap) + ")");
    std::vector<monomial> prods;
    prods.reserve(pairs);
    for (const monomial& u : lhs.generators())
        for (const monomial& v : rhs.generators())
            prods.push_back(u * v);
    return monomial_ideal::from_generators(lhs.nx(), lhs.ny(), std::move(prods));
}

monomial_ideal power(const monomial_ideal& base, int n, std::size_t pair_cap) {
    if (n < 0) throw std::invalid_argument("power exponent must be nonnegative");
    if (n > max_power_exponent)
        throw std::invalid_argument("power exponent exceeds supported bound 64");
    monomial_ideal acc = monomial_ideal::unit_ideal(base.nx(), base.ny());
    for (int k = 0; k < n; ++k) acc = product(acc, base, pair_cap);
    return acc;
}

monomial_ideal intersect(const monomial_ideal& lhs, const monomial_ideal& rhs,
                         std::size_t pair_cap) {
    if (lhs.nx() != rhs.nx() || lhs.ny() != rhs.ny())
        throw std::invalid_argument("ideal widths do not match");
    const std::size_t pairs = lhs.generator_count() * rhs.generator_count();
    if (pairs > pair_cap)
        throw std::runtime_error("intersection cap exceeded: " + std::to_string(pairs) +
                                 " pairwise lcms (cap " + std::to_string(pair_cap) + ")");
    std::vector<monomial> lcms;
    lcms.reserve(pairs);
    for (const monomial& u : lhs.generators())
        for (const monomial& v : rhs.generators())
            lcms.push_back(lcm(u, v));
    return monomial_ideal::from_generators(lhs.nx(), lhs.ny(), std::move(lcms));
}

monomial_ideal colon_by_monomial(const monomial_ideal& ideal, const monomial& m) {
    if (ideal.nx() != m.nx() || ideal.nx() + ideal.ny() != m.width())
        throw std::invalid_argument("monomial width does not match the ideal");
    std::vector<monomial> quotients;
    quotients.reserve(ideal.generator_count());
    for (const monomial& u : ideal.generators())
        quotients.push_back(colon_quotient(u, m));
    return monomial_ideal::from_generators(ideal.nx(), ideal.ny(), std::move(quotients));
}

bool equals(const monomial_ideal& lhs, const monomial_ideal& rhs) {
    if (lhs.nx() != rhs.nx() || lhs.ny() != rhs.ny())
        throw std::invalid_argument("ideal widths do not match");
    return lhs.generators() == rhs.generators();
}

} // namespace pigraph
