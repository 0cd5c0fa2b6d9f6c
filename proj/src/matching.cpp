#include "powg/matching.hpp"

#include "powg/errors.hpp"

#include <unordered_map>

namespace powg {

BigInt MatchingPolynomial::hosoya_index() const
{
    BigInt z = 0;
    for (const auto& c : coeffs)
        z += c;
    return z;
}

std::string MatchingPolynomial::render() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ", ";
        out += "m_" + std::to_string(i) + "=" + to_string(coeffs[i]);
    }
    return out;
}

namespace {

class MatchingEngine {
public:
    MatchingEngine(const Graph& graph, const MatchingOptions& options) : graph_(graph), options_(options) {}

    BigPoly count(const VertexSet& subset)
    {
        if (subset.empty())
            return {1};
        VertexSet rest = subset;
        BigPoly result;
        bool several = false;
        while (!rest.empty()) {
            VertexSet comp = component_of(rest.first(), rest);
            rest.subtract(comp);
            if (result.empty())
                result = count_connected(comp);
            else {
                several = true;
                result = poly_mul(result, count_connected(comp));
            }
        }
        if (several)
            ++stats_.factorizations;
        return result;
    }

    const MatchingStats& stats()
    {
        stats_.memo_entries = memo_.size();
        return stats_;
    }

private:
    VertexSet component_of(Vertex start, const VertexSet& within) const
    {
        VertexSet comp(graph_.size());
        VertexSet frontier(graph_.size());
        comp.insert(start);
        frontier.insert(start);
        while (!frontier.empty()) {
            VertexSet next(graph_.size());
            frontier.for_each([&](Vertex v) { next |= graph_.neighbours(v); });
            next &= within;
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        return comp;
    }

    Vertex choose_pivot(const VertexSet& comp) const
    {
        if (options_.pivot == PivotRule::lowest_index)
            return comp.first();
        Vertex best = comp.first();
        std::size_t best_degree = 0;
        bool have = false;
        comp.for_each([&](Vertex v) {
            std::size_t d = graph_.neighbours(v).count_common(comp);
            bool better = !have || d > best_degree ||
                          (d == best_degree && options_.pivot == PivotRule::max_degree_reversed);
            if (better) {
                best = v;
                best_degree = d;
                have = true;
            }
        });
        return best;
    }

    BigPoly count_connected(const VertexSet& comp)
    {
        const std::size_t size = comp.count();
        if (size == 1)
            return {1};
        if (size == 2)
            return {1, 1};

        if (auto it = memo_.find(comp); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }

        ++stats_.expansions;
        if (size > stats_.largest_component)
            stats_.largest_component = size;

        const Vertex pivot = choose_pivot(comp);
        VertexSet without = comp;
        without.erase(pivot);

        BigPoly result = count(without);
        BigPoly shifted;
        (graph_.neighbours(pivot) & comp).for_each([&](Vertex w) {
            VertexSet both = without;
            both.erase(w);
            shifted = poly_add(shifted, count(both));
        });
        shifted.insert(shifted.begin(), BigInt{0});
        result = poly_add(result, shifted);

        if (memo_.size() >= options_.memo_cap)
            throw ResourceLimit{"matching engine memo exceeded its cap of " + std::to_string(options_.memo_cap) +
                                " entries"};
        memo_.emplace(comp, result);
        return result;
    }

    const Graph& graph_;
    MatchingOptions options_;
    std::unordered_map<VertexSet, BigPoly, VertexSetHash> memo_;
    MatchingStats stats_;
};

void trim(BigPoly& p)
{
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

}  // namespace

MatchingPolynomial matching_polynomial(const Graph& graph, const MatchingOptions& options, MatchingStats* stats)
{
    MatchingEngine engine{graph, options};
    MatchingPolynomial poly{engine.count(VertexSet::full(graph.size()))};
    trim(poly.coeffs);
    if (stats)
        *stats = engine.stats();
    return poly;
}

BigInt hosoya_index(const Graph& graph, const MatchingOptions& options)
{
    return matching_polynomial(graph, options).hosoya_index();
}

namespace {

void enumerate(const std::vector<Edge>& edges, std::size_t next, std::uint32_t used, std::size_t size,
               std::vector<std::uint64_t>& counts)
{
    if (next == edges.size()) {
        ++counts[size];
        return;
    }
    enumerate(edges, next + 1, used, size, counts);
    auto [a, b] = edges[next];
    const std::uint32_t mask = (1u << a) | (1u << b);
    if (!(used & mask))
        enumerate(edges, next + 1, used | mask, size + 1, counts);
}

}  // namespace

MatchingPolynomial brute_force_matchings(const Graph& graph)
{
    if (graph.size() > brute_force_limit)
        throw InvalidInput{"brute-force matching enumeration is limited to " + std::to_string(brute_force_limit) +
                           " vertices"};
    std::vector<std::uint64_t> counts(graph.size() / 2 + 1, 0);
    enumerate(graph.edges(), 0, 0, 0, counts);
    MatchingPolynomial poly;
    for (auto c : counts)
        poly.coeffs.emplace_back(c);
    trim(poly.coeffs);
    return poly;
}

std::string to_string(PaperMode mode)
{
    return mode == PaperMode::printed ? "printed" : "corrected";
}

PaperMode parse_paper_mode(const std::string& text)
{
    if (text == "printed")
        return PaperMode::printed;
    if (text == "corrected")
        return PaperMode::corrected;
    throw InvalidInput{"unknown mode '" + text + "' (expected printed or corrected)"};
}

BigInt complete_graph_matchings(long long n, long long i, PaperMode mode)
{
    if (i < 0 || 2 * i > n)
        throw FormulaError{"K_" + std::to_string(n) + " has no matchings of order " + std::to_string(i)};
    BigInt product = 1;
    for (long long s = 0; s < i; ++s)
        product *= binomial(n - 2 * s, 2);
    const std::string what = "matchings of order " + std::to_string(i) + " in K_" + std::to_string(n);
    if (mode == PaperMode::printed) {
        if (i == 0)
            throw FormulaError{what + ": printed factor 1/i is undefined at i = 0"};
        return exact_div(product, i, what);
    }
    BigInt factorial = 1;
    for (long long t = 2; t <= i; ++t)
        factorial *= t;
    return exact_div(product, factorial, what);
}

BigInt telephone_number(long long n)
{
    if (n < 0)
        throw InvalidInput{"telephone number of a negative size"};
    BigInt total = 0;
    for (long long i = 0; 2 * i <= n; ++i)
        total += complete_graph_matchings(n, i, PaperMode::corrected);
    return total;
}

}  // namespace powg
