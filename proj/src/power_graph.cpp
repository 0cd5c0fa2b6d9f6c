#include "powg/power_graph.hpp"

#include "powg/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace powg {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels)
{
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t v = 0; v < n; ++v)
            labels[v] = std::to_string(v);
    }
    if (labels.size() != n)
        throw InvalidInput{"label count does not match vertex count"};
    return labels;
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adj_(n, VertexSet(n)), labels_(default_labels(n, std::move(labels)))
{
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw InvalidInput{"edge references a vertex out of range"};
        if (a == b)
            throw InvalidInput{"self-loop at vertex " + std::to_string(a)};
        adj_[a].insert(b);
        adj_[b].insert(a);
    }
}

Graph::Graph(std::vector<VertexSet> rows, std::vector<std::string> labels)
    : adj_(std::move(rows)), labels_(default_labels(adj_.size(), std::move(labels)))
{
    const std::size_t n = adj_.size();
    for (Vertex v = 0; v < n; ++v) {
        if (adj_[v].capacity() != n)
            throw InvalidInput{"adjacency row has the wrong width"};
        if (adj_[v].contains(v))
            throw InvalidInput{"self-loop at vertex " + std::to_string(v)};
        adj_[v].for_each([&](Vertex w) {
            if (!adj_[w].contains(v))
                throw InvalidInput{"adjacency is not symmetric at (" + std::to_string(v) + ", " +
                                   std::to_string(w) + ")"};
        });
    }
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex v = 0; v < adj_.size(); ++v)
        for (Vertex w = adj_[v].next(v + 1); w < adj_.size(); w = adj_[v].next(w + 1))
            out.emplace_back(v, w);
    return out;
}

Graph complete_graph(std::size_t n)
{
    std::vector<VertexSet> rows(n, VertexSet::full(n));
    for (Vertex v = 0; v < n; ++v)
        rows[v].erase(v);
    return Graph{std::move(rows)};
}

Graph build_power_graph(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Element y = 0; y < n; ++y) {
        cyclic_subgroup(g, y).for_each([&](Element x) {
            if (x != y) {
                rows[x].insert(y);
                rows[y].insert(x);
            }
        });
    }
    return Graph{std::move(rows), g.labels()};
}

Graph induced_subgraph(const Graph& graph, const std::vector<Vertex>& vertices)
{
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (v >= graph.size())
            throw InvalidInput{"vertex " + std::to_string(v) + " out of range"};

    const std::size_t m = sorted.size();
    std::vector<VertexSet> rows(m, VertexSet(m));
    std::vector<std::string> labels(m);
    for (Vertex i = 0; i < m; ++i) {
        labels[i] = graph.label(sorted[i]);
        for (Vertex j = 0; j < m; ++j)
            if (graph.adjacent(sorted[i], sorted[j]))
                rows[i].insert(j);
    }
    return Graph{std::move(rows), std::move(labels)};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& graph)
{
    const std::size_t n = graph.size();
    std::vector<std::vector<Vertex>> out;
    VertexSet unseen = VertexSet::full(n);
    for (Vertex start = unseen.first(); start < n; start = unseen.first()) {
        VertexSet comp(n);
        std::vector<Vertex> stack{start};
        comp.insert(start);
        unseen.erase(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            (graph.neighbours(v) & unseen).for_each([&](Vertex w) {
                unseen.erase(w);
                comp.insert(w);
                stack.push_back(w);
            });
        }
        out.push_back(comp.to_vector());
    }
    return out;
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& graph)
{
    std::map<std::size_t, std::size_t> hist;
    for (Vertex v = 0; v < graph.size(); ++v)
        ++hist[graph.degree(v)];
    return hist;
}

std::size_t EdgeClassification::count(const std::string& type) const
{
    auto it = membership.find(type);
    return it == membership.end() ? 0 : it->second.size();
}

std::size_t EdgeClassification::primary_count(const std::string& type) const
{
    auto it = primary.find(type);
    return it == primary.end() ? 0 : it->second.size();
}

std::size_t EdgeClassification::proof_type_count(const std::string& type) const
{
    auto it = proof_types.find(type);
    return it == proof_types.end() ? 0 : it->second.size();
}

const std::vector<std::string>& edge_type_names()
{
    static const std::vector<std::string> names{"E-1", "E-4", "E-5",  "E-6",  "E-7",  "E-8",
                                                "E-9", "E-10", "E-11", "E-12", "E-13"};
    return names;
}

const std::vector<std::string>& proof_edge_type_names()
{
    static const std::vector<std::string> names{"eu", "eh1", "eh2", "eh3", "uh3", "vw", "yz"};
    return names;
}

namespace {

struct VertexRoles {
    explicit VertexRoles(std::size_t n) : a1(n), a2(n), a6(n), pair(n, -1) {}
    Vertex e = 0;
    Vertex u = 0;
    VertexSet a1;  // <r>
    VertexSet a2;  // H2
    VertexSet a6;  // H3
    std::vector<long> pair;

    bool in_a1(Vertex v) const { return a1.contains(v); }
    bool in_a2(Vertex v) const { return a2.contains(v); }
    bool in_a3(Vertex v) const { return a1.contains(v) && v != e; }
    bool in_a4(Vertex v) const { return a1.contains(v) && v != u; }
    bool in_omega(Vertex v) const { return v == e || v == u; }
    bool in_a5(Vertex v) const { return a1.contains(v) && !in_omega(v); }
    bool in_a6(Vertex v) const { return a6.contains(v); }
};

using Pattern = std::function<bool(const VertexRoles&, Vertex, Vertex)>;

// Directed patterns x1 ~ x2; an edge matches if either orientation does.
const std::map<std::string, Pattern>& edge_patterns()
{
    static const std::map<std::string, Pattern> patterns{
        {"E-1", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a1(a) && r.in_a1(b); }},
        {"E-4", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a3(a) && r.in_a3(b); }},
        {"E-5", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a3(a) && b == r.e; }},
        // E-3 (A1 - A2) folded in
        {"E-6", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a2(a) && r.in_a1(b); }},
        {"E-7", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a5(a) && r.in_a5(b); }},
        {"E-8", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_omega(a) && r.in_omega(b); }},
        {"E-9", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a5(a) && r.in_omega(b); }},
        // E-2 (A1 - A6) folded in
        {"E-10", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a6(a) && r.in_a1(b); }},
        {"E-11",
         [](const VertexRoles& r, Vertex a, Vertex b) {
             return r.in_a6(a) && r.in_a6(b) && r.pair[a] >= 0 && r.pair[a] == r.pair[b];
         }},
        {"E-12", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a4(a) && r.in_a4(b); }},
        // Taken literally: u is not in A4, so nothing matches.
        {"E-13", [](const VertexRoles& r, Vertex a, Vertex b) { return r.in_a4(a) && r.in_a4(b) && b == r.u; }},
    };
    return patterns;
}

// Most specific first.
const std::vector<std::string>& primary_order()
{
    static const std::vector<std::string> order{"E-11", "E-8", "E-6",  "E-10", "E-5", "E-9",
                                                "E-7",  "E-4", "E-12", "E-1",  "E-13"};
    return order;
}

VertexRoles make_roles(const Graph& graph, const GroupPartition& part)
{
    const std::size_t n = graph.size();
    const std::size_t total = part.h0.size() + part.h1.size() + part.h2.size() + part.h3.size();
    if (total != n)
        throw InvalidInput{"partition covers " + std::to_string(total) + " elements but the graph has " +
                           std::to_string(n) + " vertices"};
    VertexRoles roles(n);
    roles.e = part.h0.at(0);
    roles.u = part.u;
    for (auto v : part.rotations())
        roles.a1.insert(v);
    for (auto v : part.h2)
        roles.a2.insert(v);
    for (auto v : part.h3)
        roles.a6.insert(v);
    for (std::size_t j = 0; j < part.partner_pairs.size(); ++j) {
        roles.pair[part.partner_pairs[j].first] = static_cast<long>(j);
        roles.pair[part.partner_pairs[j].second] = static_cast<long>(j);
    }
    return roles;
}

std::string proof_type(const VertexRoles& r, Vertex a, Vertex b)
{
    auto one_way = [&](Vertex x, Vertex y) -> std::string {
        if (x == r.e && y == r.u)
            return "eu";
        if (x == r.e && r.in_a5(y))
            return "eh1";
        if (x == r.e && r.in_a2(y))
            return "eh2";
        if (x == r.e && r.in_a6(y))
            return "eh3";
        if (x == r.u && r.in_a6(y))
            return "uh3";
        if (r.in_a5(x) && r.in_a5(y))
            return "vw";
        if (r.in_a6(x) && r.in_a6(y) && r.pair[x] >= 0 && r.pair[x] == r.pair[y])
            return "yz";
        return {};
    };
    auto t = one_way(a, b);
    if (t.empty())
        t = one_way(b, a);
    return t.empty() ? "unclassified" : t;
}

}  // namespace

EdgeClassification classify_edges(const Graph& graph, const GroupPartition& part)
{
    const VertexRoles roles = make_roles(graph, part);
    const auto& patterns = edge_patterns();

    EdgeClassification out;
    for (const auto& name : edge_type_names()) {
        out.membership[name];
        out.primary[name];
    }
    out.primary["unclassified"];
    for (const auto& name : proof_edge_type_names())
        out.proof_types[name];
    out.proof_types["unclassified"];

    for (const Edge& edge : graph.edges()) {
        auto [a, b] = edge;
        ++out.total_edges;
        auto matches = [&](const std::string& name) {
            const auto& p = patterns.at(name);
            return p(roles, a, b) || p(roles, b, a);
        };
        for (const auto& name : edge_type_names())
            if (matches(name))
                out.membership[name].push_back(edge);

        std::string primary = "unclassified";
        for (const auto& name : primary_order())
            if (matches(name)) {
                primary = name;
                break;
            }
        out.primary[primary].push_back(edge);
        out.proof_types[proof_type(roles, a, b)].push_back(edge);
    }
    return out;
}

StructureTheoremReport verify_structure_theorem(const Graph& graph, const GroupPartition& part)
{
    StructureTheoremReport report;
    const std::size_t order = graph.size();
    const std::size_t total = part.h0.size() + part.h1.size() + part.h2.size() + part.h3.size();
    if (total != order)
        throw InvalidInput{"partition does not match the graph"};

    const auto rotations = part.rotations();
    const Graph rotation_graph = induced_subgraph(graph, rotations);
    const Graph cyclic_graph = build_power_graph(build_cyclic(rotations.size()));
    report.total_edges = graph.edge_count();
    report.rotation_edges = rotation_graph.edge_count();
    report.cyclic_graph_edges = cyclic_graph.edge_count();
    // r^a has index a, so the induced subgraph is indexed like Z_(2^k p).
    report.rotation_matches_cyclic = rotation_graph == cyclic_graph;

    const Vertex e = part.h0.at(0);
    const Vertex u = part.u;
    auto norm = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };

    std::set<Edge> pendant;
    for (Vertex h2 : part.h2)
        pendant.insert(norm(e, h2));
    std::set<Edge> pairs;
    for (auto [y, z] : part.partner_pairs)
        for (Edge edge : {norm(e, y), norm(e, z), norm(u, y), norm(u, z), norm(y, z)})
            pairs.insert(edge);
    report.expected_pendant_edges = part.h2.size();
    report.expected_pair_edges = 5 * part.partner_pairs.size();

    VertexSet in_rotations(order);
    for (Vertex v : rotations)
        in_rotations.insert(v);

    report.parts_present = true;
    for (const auto& edge : pendant) {
        if (graph.adjacent(edge.first, edge.second))
            ++report.pendant_edges;
        else
            report.parts_present = false;
    }
    for (const auto& edge : pairs) {
        if (graph.adjacent(edge.first, edge.second))
            ++report.pair_edges;
        else
            report.parts_present = false;
    }
    report.parts_present = report.parts_present && pairs.size() == report.expected_pair_edges;

    report.cover = true;
    report.disjoint = true;
    for (const Edge& edge : graph.edges()) {
        int hits = (in_rotations.contains(edge.first) && in_rotations.contains(edge.second)) +
                   static_cast<int>(pendant.count(edge)) + static_cast<int>(pairs.count(edge));
        if (hits == 0) {
            report.cover = false;
            report.uncovered.push_back(edge);
        }
        if (hits > 1)
            report.disjoint = false;
    }
    // prescribed parts must not overlap among themselves either
    for (const auto& edge : pendant)
        if (pairs.count(edge) || (in_rotations.contains(edge.first) && in_rotations.contains(edge.second)))
            report.disjoint = false;
    for (const auto& edge : pairs)
        if (in_rotations.contains(edge.first) && in_rotations.contains(edge.second))
            report.disjoint = false;

    report.count_identity =
        report.total_edges == report.cyclic_graph_edges + report.expected_pendant_edges + report.expected_pair_edges;
    return report;
}

namespace {

std::string dot_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string export_graph(const Graph& graph, ExportFormat format)
{
    std::ostringstream out;
    const auto edges = graph.edges();
    if (format == ExportFormat::edge_list) {
        for (auto [a, b] : edges)
            out << a << ' ' << b << '\n';
        return out.str();
    }
    out << "graph powg {\n";
    for (Vertex v = 0; v < graph.size(); ++v)
        out << "  " << dot_quote(graph.label(v)) << ";\n";
    for (auto [a, b] : edges)
        out << "  " << dot_quote(graph.label(a)) << " -- " << dot_quote(graph.label(b)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace powg
