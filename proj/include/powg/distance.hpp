#pragma once

#include "powg/bigint.hpp"
#include "powg/power_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powg {

/// Shortest-path distances for every ordered vertex pair.
class DistanceTable {
public:
    static constexpr std::uint32_t unreachable = UINT32_MAX;

    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, unreachable) {}

    std::size_t size() const { return n_; }
    std::uint32_t at(Vertex a, Vertex b) const { return d_[a * n_ + b]; }
    void set(Vertex a, Vertex b, std::uint32_t d) { d_[a * n_ + b] = d; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

/// Breadth-first search from every vertex.
DistanceTable all_pairs_distances(const Graph& graph);

/// Hosoya polynomial coefficients dis(G, i).
///
/// dis(G, 0) counts the n self-pairs; for i >= 1 unordered pairs at distance
/// i are counted. Pairs in different components are excluded and tallied in
/// `unreachable_pairs`, so the counts plus that tally always equal n + C(n, 2).
struct DistanceDistribution {
    std::vector<std::uint64_t> counts;
    std::uint64_t unreachable_pairs = 0;

    std::uint64_t at(std::size_t i) const { return i < counts.size() ? counts[i] : 0; }

    /// Ascending form, e.g. "6 + 13x + 2x^2".
    std::string render() const;

    friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;
};

DistanceDistribution hosoya_polynomial(const Graph& graph);

/// Sum over w != v of 1 / d(v, w). Throws InvalidInput if some vertex is
/// unreachable from v.
Rational reciprocal_status(const Graph& graph, Vertex v);

/// deg(v) + (n - 1 - deg(v)) / 2, which equals reciprocal_status whenever
/// the graph has diameter at most 2.
Rational reciprocal_status_diameter_two(const Graph& graph, Vertex v);

/// Polynomial with exact rational exponents and integer coefficients.
class RationalExponentPolynomial {
public:
    void add(const Rational& exponent, const BigInt& coefficient);

    const std::map<Rational, BigInt>& terms() const { return terms_; }
    BigInt coefficient(const Rational& exponent) const;
    BigInt coefficient_total() const;

    /// Descending exponents, "c·x^e" joined by " + "; rational exponents as "a/2".
    std::string render() const;

    friend bool operator==(const RationalExponentPolynomial&, const RationalExponentPolynomial&) = default;

private:
    std::map<Rational, BigInt> terms_;
};

/// Sum over edges vw of x^(rs(v) + rs(w)). Throws InvalidInput on a
/// disconnected graph.
RationalExponentPolynomial rs_hosoya_polynomial(const Graph& graph);

/// Sum of distances over unordered reachable pairs.
std::uint64_t wiener_index(const Graph& graph);

/// Largest finite distance, or nullopt when the graph is disconnected.
std::optional<std::uint32_t> diameter(const Graph& graph);

}  // namespace powg
