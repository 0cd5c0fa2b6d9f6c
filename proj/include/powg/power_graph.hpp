#pragma once

#include "powg/group.hpp"
#include "powg/vertex_set.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace powg {

/// Unordered edge with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph with bit-vector adjacency rows.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInput if an edge is a loop or references a vertex >= n.
    Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    /// Takes adjacency rows directly; throws InvalidInput unless they are
    /// symmetric with a clear diagonal.
    Graph(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

    std::size_t size() const { return adj_.size(); }
    const VertexSet& neighbours(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex a, Vertex b) const { return adj_[a].contains(b); }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t edge_count() const;

    /// All edges, ascending lexicographic.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

Graph complete_graph(std::size_t n);

/// x ~ y iff x != y and one lies in the cyclic subgroup generated by the other.
Graph build_power_graph(const FiniteGroup& g);

/// Induced subgraph on `vertices`, renumbered in ascending vertex order.
Graph induced_subgraph(const Graph& graph, const std::vector<Vertex>& vertices);

/// Components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& graph);

/// degree -> number of vertices with that degree.
std::map<std::size_t, std::size_t> degree_histogram(const Graph& graph);

/// Edges of a family power graph grouped by the edge-type table.
///
/// `membership` lists, per type, every edge matching the type's vertex
/// pattern; the E-k types overlap (E-4, E-5, E-7, E-8, E-9, E-12, E-13 are
/// all inside E-1). E-2 is folded into E-10 and E-3 into E-6.
/// `primary` assigns each edge to exactly one type: the most specific
/// pattern it matches, or "unclassified".
/// `proof_types` partitions the edges by the seven endpoint classes
/// eu, eh1, eh2, eh3, uh3, vw, yz, plus "unclassified".
struct EdgeClassification {
    std::map<std::string, std::vector<Edge>> membership;
    std::map<std::string, std::vector<Edge>> primary;
    std::map<std::string, std::vector<Edge>> proof_types;
    std::size_t total_edges = 0;

    std::size_t count(const std::string& type) const;
    std::size_t primary_count(const std::string& type) const;
    std::size_t proof_type_count(const std::string& type) const;
};

/// Names of the edge types in table order, after the E-2/E-10 and E-3/E-6 merges.
const std::vector<std::string>& edge_type_names();
/// Names of the seven endpoint classes.
const std::vector<std::string>& proof_edge_type_names();

EdgeClassification classify_edges(const Graph& graph, const GroupPartition& part);

struct StructureTheoremReport {
    std::size_t total_edges = 0;
    std::size_t rotation_edges = 0;        ///< edges with both ends in <r>
    std::size_t cyclic_graph_edges = 0;    ///< |E(P(Z_(2^k p)))|, built independently
    std::size_t pendant_edges = 0;         ///< e-h2 edges present
    std::size_t expected_pendant_edges = 0;
    std::size_t pair_edges = 0;            ///< partner-pair K4 edges present
    std::size_t expected_pair_edges = 0;
    bool rotation_matches_cyclic = false;  ///< induced <r> subgraph equals P(Z_(2^k p)) by index
    bool parts_present = false;            ///< every prescribed pendant/pair edge is an edge
    bool cover = false;                    ///< every edge lies in some part
    bool disjoint = false;                 ///< no edge lies in two parts
    bool count_identity = false;           ///< |E| = |E(P(Z))| + 2^(k-1)p + 5 * 2^(k-2)p
    std::vector<Edge> uncovered;

    bool holds() const { return rotation_matches_cyclic && parts_present && cover && disjoint && count_identity; }
};

StructureTheoremReport verify_structure_theorem(const Graph& graph, const GroupPartition& part);

enum class ExportFormat { dot, edge_list };

std::string export_graph(const Graph& graph, ExportFormat format);

}  // namespace powg
