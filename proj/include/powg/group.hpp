#pragma once

#include "powg/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powg {

using Element = Vertex;

/// Parameters (k, p) of the family <r, s : r^(2^k p) = s^2 = e, s r s^-1 = r^(2^(k-1) p - 1)>.
struct FamilyParams {
    int k = 2;
    std::int64_t p = 3;

    /// Throws InvalidInput unless k >= 2, p is an odd prime and the group
    /// order 2^(k+1) p fits in 62 bits.
    void validate() const;

    std::int64_t n() const { return (std::int64_t{1} << k) * p; }            ///< 2^k p, order of r
    std::int64_t half() const { return (std::int64_t{1} << (k - 1)) * p; }   ///< 2^(k-1) p
    std::int64_t quarter() const { return (std::int64_t{1} << (k - 2)) * p; } ///< 2^(k-2) p
    std::int64_t order() const { return 2 * n(); }
    std::int64_t twist() const { return half() - 1; }                          ///< m with s r s^-1 = r^m

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

bool is_odd_prime(std::int64_t p);

/// Finite group given by a total multiplication table over indices
/// 0..order-1 with identity 0. Immutable after construction.
class FiniteGroup {
public:
    /// Takes an already validated table (row-major, order x order).
    FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                std::string associativity_check, std::optional<FamilyParams> family = std::nullopt);

    std::size_t order() const { return order_; }
    Element identity() const { return 0; }
    Element mult(Element a, Element b) const { return table_[a * order_ + b]; }
    Element inverse(Element x) const { return inverses_[x]; }
    const std::string& label(Element x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// "full" or "sampled:<triples>"; how associativity was established.
    const std::string& associativity_check() const { return associativity_check_; }

    /// Set when the group came from build_family.
    const std::optional<FamilyParams>& family() const { return family_; }

    Element power(Element x, std::uint64_t t) const;

private:
    std::size_t order_;
    std::vector<Element> table_;
    std::vector<Element> inverses_;
    std::vector<std::string> labels_;
    std::string associativity_check_;
    std::optional<FamilyParams> family_;
};

/// Largest group order build_family and build_cyclic will materialize.
inline constexpr std::size_t max_materialized_order = 1u << 14;

/// Orders at or below this get an exhaustive associativity check.
inline constexpr std::size_t full_associativity_limit = 128;

/// The family group, realized as pairs (a, b) = r^a s^b with index a + b * 2^k p
/// and product (a1 + a2 * m^b1, b1 xor b2).
FiniteGroup build_family(const FamilyParams& params);

/// Z_n under addition.
FiniteGroup build_cyclic(std::size_t n);

/// Parses and validates the Cayley-table text format.
FiniteGroup load_cayley_table(std::string_view text);

/// Validates a raw table against the group axioms and returns the group.
/// Throws NotAGroup naming the failing axiom and witness.
FiniteGroup make_group_from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> labels);

std::uint64_t element_order(const FiniteGroup& g, Element x);

/// {x^t : t >= 0} as a set over the group's elements.
VertexSet cyclic_subgroup(const FiniteGroup& g, Element x);

/// The element index of r^a s^b in a family group.
Element family_element(const FamilyParams& params, std::int64_t a, int b);

struct GroupPartition {
    std::vector<Element> h0;  ///< {e, u}
    std::vector<Element> h1;  ///< <r> \ {e, u}
    std::vector<Element> h2;  ///< s r^even
    std::vector<Element> h3;  ///< s r^odd
    Element u = 0;            ///< r^(2^(k-1) p)
    /// Partner pairs (y_j, z_j) = (s r^(2j+1), s r^(2j+1+2^(k-1)p)), z_j = y_j^3.
    std::vector<std::pair<Element, Element>> partner_pairs;

    /// Elements of <r> (A1 in the edge-type table), ascending.
    std::vector<Element> rotations() const;
};

/// Throws InvalidInput if `g` was not built by build_family(params).
GroupPartition partition(const FiniteGroup& g, const FamilyParams& params);

}  // namespace powg
