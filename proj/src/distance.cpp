#include "powg/distance.hpp"

#include "powg/errors.hpp"

#include <sstream>

namespace powg {

DistanceTable all_pairs_distances(const Graph& graph)
{
    const std::size_t n = graph.size();
    DistanceTable table(n);
    for (Vertex source = 0; source < n; ++source) {
        VertexSet unseen = VertexSet::full(n);
        unseen.erase(source);
        table.set(source, source, 0);
        std::vector<Vertex> frontier{source};
        for (std::uint32_t d = 1; !frontier.empty(); ++d) {
            std::vector<Vertex> next;
            for (Vertex v : frontier) {
                (graph.neighbours(v) & unseen).for_each([&](Vertex w) {
                    unseen.erase(w);
                    table.set(source, w, d);
                    next.push_back(w);
                });
            }
            frontier = std::move(next);
        }
    }
    return table;
}

std::string DistanceDistribution::render() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (i == 0)
            out << counts[i];
        else {
            if (counts[i] != 1)
                out << counts[i];
            out << 'x';
            if (i > 1)
                out << '^' << i;
        }
    }
    if (first)
        out << '0';
    return out.str();
}

DistanceDistribution hosoya_polynomial(const Graph& graph)
{
    const std::size_t n = graph.size();
    const auto table = all_pairs_distances(graph);
    DistanceDistribution dist;
    dist.counts.assign(1, n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            auto d = table.at(a, b);
            if (d == DistanceTable::unreachable) {
                ++dist.unreachable_pairs;
                continue;
            }
            if (dist.counts.size() <= d)
                dist.counts.resize(d + 1, 0);
            ++dist.counts[d];
        }
    return dist;
}

namespace {

Rational status_from_row(const DistanceTable& table, Vertex v)
{
    Rational rs = 0;
    for (Vertex w = 0; w < table.size(); ++w) {
        if (w == v)
            continue;
        auto d = table.at(v, w);
        if (d == DistanceTable::unreachable)
            throw InvalidInput{"reciprocal status is undefined: vertex " + std::to_string(w) +
                               " is unreachable from " + std::to_string(v)};
        rs += Rational{1, d};
    }
    return rs;
}

}  // namespace

Rational reciprocal_status(const Graph& graph, Vertex v)
{
    if (v >= graph.size())
        throw InvalidInput{"vertex out of range"};
    return status_from_row(all_pairs_distances(graph), v);
}

Rational reciprocal_status_diameter_two(const Graph& graph, Vertex v)
{
    const auto deg = static_cast<long long>(graph.degree(v));
    const auto n = static_cast<long long>(graph.size());
    return Rational{deg} + Rational{n - 1 - deg, 2};
}

void RationalExponentPolynomial::add(const Rational& exponent, const BigInt& coefficient)
{
    if (coefficient == 0)
        return;
    auto& c = terms_[exponent];
    c += coefficient;
    if (c == 0)
        terms_.erase(exponent);
}

BigInt RationalExponentPolynomial::coefficient(const Rational& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt{0} : it->second;
}

BigInt RationalExponentPolynomial::coefficient_total() const
{
    BigInt total = 0;
    for (const auto& [e, c] : terms_)
        total += c;
    return total;
}

std::string RationalExponentPolynomial::render() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += to_string(it->second) + "·x^" + to_string(it->first);
    }
    return out;
}

RationalExponentPolynomial rs_hosoya_polynomial(const Graph& graph)
{
    const auto table = all_pairs_distances(graph);
    std::vector<Rational> rs(graph.size());
    for (Vertex v = 0; v < graph.size(); ++v)
        rs[v] = status_from_row(table, v);
    RationalExponentPolynomial poly;
    for (auto [a, b] : graph.edges())
        poly.add(rs[a] + rs[b], 1);
    return poly;
}

std::uint64_t wiener_index(const Graph& graph)
{
    const auto dist = hosoya_polynomial(graph);
    std::uint64_t w = 0;
    for (std::size_t i = 1; i < dist.counts.size(); ++i)
        w += i * dist.counts[i];
    return w;
}

std::optional<std::uint32_t> diameter(const Graph& graph)
{
    const auto dist = hosoya_polynomial(graph);
    if (dist.unreachable_pairs > 0)
        return std::nullopt;
    return static_cast<std::uint32_t>(dist.counts.size() - 1);
}

}  // namespace powg
