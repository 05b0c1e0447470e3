#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pigraph {

// Everything downstream of a ring is O(|R|^2) or worse, so ring orders are
// capped at construction; the cap is configurable per call site.
inline constexpr std::uint64_t default_ring_order_cap = 4096;

// Finite commutative ring with identity of the form Z_{n_1} x ... x Z_{n_k}.
class ring_spec {
public:
    explicit ring_spec(std::vector<std::uint64_t> factors,
                       std::uint64_t order_cap = default_ring_order_cap);

    const std::vector<std::uint64_t>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }

    bool operator==(const ring_spec& other) const { return factors_ == other.factors_; }

private:
    std::vector<std::uint64_t> factors_;
    std::uint64_t order_;
};

// Element as a residue tuple, coords[i] in {0, ..., n_i - 1}.
struct ring_element {
    std::vector<std::uint64_t> coords;
    auto operator<=>(const ring_element&) const = default;
};

// Parses "Z6", "Z8", "Z2xZ3" (case-insensitive, 'x' separates factors).
ring_spec parse_ring_spec(const std::string& text,
                          std::uint64_t order_cap = default_ring_order_cap);

std::string to_string(const ring_spec& r);
std::string to_string(const ring_element& e);

ring_element zero_element(const ring_spec& r);
bool element_in_ring(const ring_spec& r, const ring_element& e);

// All |R| elements in ascending tuple order.
std::vector<ring_element> enumerate_elements(const ring_spec& r);

// Position of e in the enumeration order.
std::uint64_t element_rank(const ring_spec& r, const ring_element& e);

ring_element add(const ring_spec& r, const ring_element& x, const ring_element& y);
ring_element mul(const ring_spec& r, const ring_element& x, const ring_element& y);

// Proper prime ideal, stored as the full member set plus its principal
// generator and the order q of the residue field R/P.
struct prime_ideal {
    std::vector<ring_element> members;  // sorted ascending, contains 0
    ring_element generator;
    std::uint64_t quotient_order = 0;   // q = |R| / |P|

    std::uint64_t size() const { return members.size(); }
    bool contains(const ring_element& e) const;
};

// Members of the principal ideal (g) = { r*g : r in R }, sorted.
std::vector<ring_element> principal_ideal_members(const ring_spec& r,
                                                  const ring_element& g);

// Definition-level exhaustive check: nullopt when s is a proper prime
// ideal, otherwise a human-readable witness for the first failure found.
std::optional<std::string> check_prime(const ring_spec& r,
                                       const std::vector<ring_element>& members);

bool verify_prime(const ring_spec& r, const std::vector<ring_element>& members);

// Builds a verified prime_ideal from an explicit member set; throws with
// the primality witness when the set fails the exhaustive check.
prime_ideal make_prime_ideal(const ring_spec& r, std::vector<ring_element> members);

// All proper prime ideals: for each factor Z_{n_i} and each prime p | n_i,
// the set of elements whose i-th coordinate is divisible by p. Every result
// is re-checked against check_prime before being returned.
std::vector<prime_ideal> prime_ideals(const ring_spec& r);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime_number(std::uint64_t n);

} // namespace pigraph
