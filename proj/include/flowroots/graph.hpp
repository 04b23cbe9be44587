#ifndef FLOWROOTS_GRAPH_HPP
#define FLOWROOTS_GRAPH_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flowroots/errors.hpp"

namespace flowroots {

struct Edge {
    int u = 0;
    int v = 0;
    int id = 0;
    bool is_loop() const { return u == v; }
};

/// Undirected multigraph: vertices 0..n-1, parallel edges and loops
/// allowed. Edge ids are stable under deletion and contraction; vertex
/// labels are not (contraction renumbers).
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {}
    Multigraph(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const;  // throws UnknownEdge
    bool has_edge_id(int id) const;

    int add_vertex() { return n_++; }
    /// Adds an edge with the smallest unused id; returns the id.
    int add_edge(int u, int v);
    int add_edge_with_id(int u, int v, int id);

    int degree(int v) const;  // loops count twice
    int loop_count() const;
    std::vector<int> loop_ids() const;
    /// v_i: number of vertices of degree i.
    std::map<int, int> degree_histogram() const;

    /// adjacency as (neighbor, edge id) pairs; loops appear twice.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    int next_id_ = 0;
};

Multigraph delete_edge(const Multigraph& g, int id);
/// Identifies the endpoints of edge id and removes it. Contracting a loop
/// just deletes it. Vertices above the removed one shift down by one.
Multigraph contract_edge(const Multigraph& g, int id);
/// Merges a vertex set into a single vertex, dropping internal edges.
Multigraph contract_set(const Multigraph& g, const std::vector<int>& vertices);

// ---- formats ----

enum class GraphFormat { Graph6, Sparse6, EdgeList };

Multigraph parse(GraphFormat format, std::string_view bytes);
/// Chooses the format from the line itself (":" or ">>sparse6<<" means
/// sparse6; a leading digit means EdgeList; otherwise graph6).
Multigraph parse_auto(std::string_view line);

std::string to_graph6(const Multigraph& g);   // simple graphs only
std::string to_sparse6(const Multigraph& g);  // any multigraph

// ---- connectivity ----

bool is_connected(const Multigraph& g);
/// component index per vertex; returns the number of components.
int connected_components(const Multigraph& g, std::vector<int>& comp);
/// ids of all cut edges.
std::vector<int> bridges(const Multigraph& g);
/// Minimum edge-cut size. Throws Disconnected; a one-vertex graph reports
/// a huge value (vacuously k-edge-connected for every k).
int edge_connectivity(const Multigraph& g);
/// Some 2-edge cutset {e, f} of a bridgeless graph, or empty if 3-edge-connected.
std::vector<int> find_two_edge_cut(const Multigraph& g);
/// Repeatedly contracts one edge of each 2-edge cutset until the graph is
/// 3-edge-connected or has collapsed to one vertex. Loops created by the
/// final contraction stay (the flow polynomial is invariant throughout).
/// Throws HasBridge.
Multigraph series_reduce(const Multigraph& g);

/// Edge sets of the 2-connected components. Loops belong to no block.
std::vector<std::vector<int>> block_edge_sets(const Multigraph& g);
/// Subgraph on the listed edges; vertices renumbered, edge ids kept.
Multigraph subgraph_of_edges(const Multigraph& g, const std::vector<int>& edge_ids);

struct Cutset {
    std::array<int, 3> edge_ids{};
    bool proper = false;
    std::vector<int> side_a;  // vertex sets of the two components of g - L
    std::vector<int> side_b;
};

struct CutsetReport {
    std::vector<Cutset> cutsets;
    int proper_count() const;
};

/// All minimal 3-edge cutsets of a connected 3-edge-connected graph,
/// tagged proper (both sides keep an edge) or improper. Direct O(m^3)
/// enumeration. Throws NotThreeEdgeConnected.
CutsetReport minimal_three_cutsets(const Multigraph& g);

/// Isomorphism-invariant key: equal exactly for isomorphic multigraphs
/// (multiplicities and loops included). Exact canonical labeling by
/// ordered-partition refinement with individualization.
std::string canonical_key(const Multigraph& g);

/// Simple underlying graph: loops dropped, each parallel class kept as
/// its smallest edge id.
Multigraph simple_support(const Multigraph& g);

/// Vertex relabeling (perm[v] = new label); edge ids reassigned 0..m-1 in
/// the given edge order. Test helper for invariance checks.
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

}  // namespace flowroots

#endif
