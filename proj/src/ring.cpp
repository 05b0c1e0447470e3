#include "pigraph/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pigraph {

ring_spec::ring_spec(std::vector<std::uint64_t> factors, std::uint64_t order_cap)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("ring needs at least one factor");
    order_ = 1;
    for (std::uint64_t n : factors_) {
        if (n < 2) throw std::invalid_argument("every ring factor must be >= 2");
        if (order_ > order_cap / n)
            throw std::invalid_argument("ring order exceeds the cap of " +
                                        std::to_string(order_cap));
        order_ *= n;
    }
}

ring_spec parse_ring_spec(const std::string& text, std::uint64_t order_cap) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) throw std::invalid_argument("empty ring spec");

    std::vector<std::uint64_t> factors;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        if (tok.size() < 2 || tok[0] != 'z' ||
            !std::all_of(tok.begin() + 1, tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad ring spec '" + text +
                                        "': expected forms like Z6 or Z2xZ3");
        factors.push_back(std::stoull(tok.substr(1)));
    }
    if (factors.empty())
        throw std::invalid_argument("bad ring spec '" + text + "'");
    return ring_spec(std::move(factors), order_cap);
}

std::string to_string(const ring_spec& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.factor_count(); ++i) {
        if (i) out << 'x';
        out << 'Z' << r.factors()[i];
    }
    return out.str();
}

std::string to_string(const ring_element& e) {
    if (e.coords.size() == 1) return std::to_string(e.coords[0]);
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i) out << ',';
        out << e.coords[i];
    }
    out << ')';
    return out.str();
}

ring_element zero_element(const ring_spec& r) {
    return ring_element{std::vector<std::uint64_t>(r.factor_count(), 0)};
}

bool element_in_ring(const ring_spec& r, const ring_element& e) {
    if (e.coords.size() != r.factor_count()) return false;
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        if (e.coords[i] >= r.factors()[i]) return false;
    return true;
}

std::vector<ring_element> enumerate_elements(const ring_spec& r) {
    std::vector<ring_element> out;
    out.reserve(r.order());
    ring_element cur = zero_element(r);
    for (;;) {
        out.push_back(cur);
        std::size_t i = r.factor_count();
        while (i > 0) {
            --i;
            if (++cur.coords[i] < r.factors()[i]) break;
            cur.coords[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::uint64_t element_rank(const ring_spec& r, const ring_element& e) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < r.factor_count(); ++i)
        rank = rank * r.factors()[i] + e.coords[i];
    return rank;
}

namespace {

void require_element(const ring_spec& r, const ring_element& e) {
    if (e.coords.size() != r.factor_count())
        throw std::invalid_argument("mismatched coordinate counts");
    if (!element_in_ring(r, e))
        throw std::invalid_argument("element " + to_string(e) + " is not in " +
                                    to_string(r));
}

} // namespace

ring_element add(const ring_spec& r, const ring_element& x, const ring_element& y) {
    require_element(r, x);
    require_element(r, y);
    ring_element out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = (out.coords[i] + y.coords[i]) % r.factors()[i];
    return out;
}

ring_element mul(const ring_spec& r, const ring_element& x, const ring_element& y) {
    require_element(r, x);
    require_element(r, y);
    ring_element out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = (out.coords[i] * y.coords[i]) % r.factors()[i];
    return out;
}

bool prime_ideal::contains(const ring_element& e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

std::vector<ring_element> principal_ideal_members(const ring_spec& r,
                                                  const ring_element& g) {
    require_element(r, g);
    std::vector<ring_element> out;
    for (const ring_element& x : enumerate_elements(r)) out.push_back(mul(r, x, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::string> check_prime(const ring_spec& r,
                                       const std::vector<ring_element>& members) {
    for (const ring_element& e : members) require_element(r, e);
    std::vector<ring_element> s = members;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    const auto in_s = [&](const ring_element& e) {
        return std::binary_search(s.begin(), s.end(), e);
    };

    if (!in_s(zero_element(r))) return "0 is not in the set";
    if (s.size() == r.order()) return "set is the whole ring, not a proper ideal";

    for (const ring_element& x : s)
        for (const ring_element& y : s) {
            const ring_element z = add(r, x, y);
            if (!in_s(z))
                return "not closed under addition: " + to_string(x) + " + " +
                       to_string(y) + " = " + to_string(z) + " is missing";
        }

    const std::vector<ring_element> all = enumerate_elements(r);
    for (const ring_element& x : s)
        for (const ring_element& t : all) {
            const ring_element z = mul(r, t, x);
            if (!in_s(z))
                return "not absorbing: " + to_string(t) + " * " + to_string(x) +
                       " = " + to_string(z) + " is missing";
        }

    for (const ring_element& x : all) {
        if (in_s(x)) continue;
        for (const ring_element& y : all) {
            if (in_s(y)) continue;
            const ring_element z = mul(r, x, y);
            if (in_s(z))
                return "not prime: " + to_string(x) + " * " + to_string(y) + " = " +
                       to_string(z) + " lies in the ideal but neither factor does";
        }
    }
    return std::nullopt;
}

bool verify_prime(const ring_spec& r, const std::vector<ring_element>& members) {
    return !check_prime(r, members).has_value();
}

prime_ideal make_prime_ideal(const ring_spec& r, std::vector<ring_element> members) {
    if (auto why = check_prime(r, members))
        throw std::invalid_argument("not a proper prime ideal: " + *why);
    prime_ideal p;
    p.members = std::move(members);
    std::sort(p.members.begin(), p.members.end());
    p.members.erase(std::unique(p.members.begin(), p.members.end()), p.members.end());
    if (r.order() % p.members.size() != 0)
        throw std::logic_error("ideal size does not divide the ring order");
    p.quotient_order = r.order() / p.members.size();

    // Finite products of Z_n are principal ideal rings, so a generator exists.
    bool found = false;
    for (const ring_element& g : p.members)
        if (principal_ideal_members(r, g) == p.members) {
            p.generator = g;
            found = true;
            break;
        }
    if (!found) throw std::logic_error("no principal generator found for prime ideal");
    return p;
}

std::vector<prime_ideal> prime_ideals(const ring_spec& r) {
    std::vector<prime_ideal> out;
    const std::vector<ring_element> all = enumerate_elements(r);
    for (std::size_t i = 0; i < r.factor_count(); ++i) {
        for (std::uint64_t p : prime_divisors(r.factors()[i])) {
            std::vector<ring_element> members;
            for (const ring_element& e : all)
                if (e.coords[i] % p == 0) members.push_back(e);
            // Construction and definition-level verification must agree.
            if (auto why = check_prime(r, members))
                throw std::logic_error("constructed ideal failed verification: " + *why);
            prime_ideal ideal = make_prime_ideal(r, std::move(members));
            if (ideal.quotient_order != p)
                throw std::logic_error("quotient order disagrees with construction");
            out.push_back(std::move(ideal));
        }
    }
    return out;
}

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace pigraph
