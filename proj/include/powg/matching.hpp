#pragma once

#include "powg/bigint.hpp"
#include "powg/power_graph.hpp"

#include <cstddef>
#include <string>

namespace powg {

/// Matching counts m_0 = 1, m_1, ..., m_floor(n/2).
struct MatchingPolynomial {
    BigPoly coeffs;

    BigInt at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : BigInt{0}; }

    /// Total number of matchings, the empty one included.
    BigInt hosoya_index() const;

    /// "m_0=1, m_1=6, m_2=3"
    std::string render() const;

    friend bool operator==(const MatchingPolynomial&, const MatchingPolynomial&) = default;
};

enum class PivotRule {
    max_degree,          ///< highest degree in the component, ties to the lowest index
    max_degree_reversed, ///< highest degree, ties to the highest index
    lowest_index,        ///< smallest vertex of the component
};

struct MatchingOptions {
    std::size_t memo_cap = std::size_t{1} << 26;
    PivotRule pivot = PivotRule::max_degree;
};

struct MatchingStats {
    std::size_t memo_entries = 0;
    std::size_t memo_hits = 0;
    std::size_t expansions = 0;        ///< components expanded by the pivot recurrence
    std::size_t factorizations = 0;    ///< subsets that split into several components
    std::size_t largest_component = 0; ///< largest component ever expanded
};

/// Exact matching polynomial by vertex-pivot deletion
///   N(G) = N(G - v) + x * sum over u ~ v of N(G - u - v)
/// with connected-component factorization and memoization on the vertex
/// subset of each component. Throws ResourceLimit once the memo would
/// exceed options.memo_cap entries.
MatchingPolynomial matching_polynomial(const Graph& graph, const MatchingOptions& options = {},
                                       MatchingStats* stats = nullptr);

BigInt hosoya_index(const Graph& graph, const MatchingOptions& options = {});

/// Largest graph brute_force_matchings accepts.
inline constexpr std::size_t brute_force_limit = 16;

/// Exhaustive include/exclude enumeration over the edge list. No memo and
/// no shared code with matching_polynomial; n <= 16.
MatchingPolynomial brute_force_matchings(const Graph& graph);

/// How the closed form for i-matchings of K_n is divided.
enum class PaperMode {
    printed,   ///< the table's 1/i factor
    corrected, ///< 1/i!
};

std::string to_string(PaperMode mode);
PaperMode parse_paper_mode(const std::string& text);

/// Number of i-matchings in K_n as (1/i) prod_{s<i} C(n-2s, 2) (printed) or
/// with 1/i! (corrected). Requires 0 <= 2i <= n. The printed form is
/// undefined at i = 0 and throws FormulaError there.
BigInt complete_graph_matchings(long long n, long long i, PaperMode mode);

/// Z(K_n), the number of involutions of n points.
BigInt telephone_number(long long n);

}  // namespace powg
