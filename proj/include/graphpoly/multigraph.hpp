#ifndef GRAPHPOLY_MULTIGRAPH_HPP
#define GRAPHPOLY_MULTIGRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphpoly {

using VertexId = int;
using EdgeId = int;

// One edge of a multigraph. The stored (tail, head) order is the reference
// orientation: the arrow points tail -> head. tail == head is a loop.
struct Edge {
    VertexId tail;
    VertexId head;
};

// Multigraph with loops and parallel edges. Vertices are 0..n-1, edge ids are
// 0..m-1 in construction order. Immutable after construction; all operations
// on it are pure functions, so instances can be shared across threads.
class MultiGraph {
public:
    MultiGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_loop(EdgeId e) const { return edges_[static_cast<size_t>(e)].tail == edges_[static_cast<size_t>(e)].head; }
    bool has_loops() const;
    int loop_count() const;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
};

// Parses the edge-list format: one edge per line as two whitespace-separated
// nonnegative integer labels, '#' starts a comment, blank lines are ignored,
// repeated lines are parallel edges, "u u" is a loop. Vertex labels are
// relabelled densely in first-appearance order; edges are numbered in input
// order. Throws ParseError with the offending line number.
MultiGraph load_graph(std::string_view text);

struct RankProfile {
    int components;  // k(G)
    int rank;        // r(G) = |V| - k(G)
    int nullity;     // |E| - r(G)
};

RankProfile rank_profile(const MultiGraph& g);

// A +-1/0 vector over all edge ids together with the edge it was built
// around; sign[pivot] is always +1.
struct SignedEdgeVector {
    EdgeId pivot;
    std::vector<std::int8_t> sign;

    int support_size() const;
};

// Spanning forest with signed fundamental circuits and fundamental bonds.
//
// The forest is the unique lexicographically least spanning forest under
// edge-id order. For every non-forest edge y, circuits holds the fundamental
// circuit of F+y directed to agree with the reference orientation on y; for
// every forest edge e, bonds holds the fundamental bond directed to agree
// with the reference orientation on e. Every circuit row has zero integer
// dot product with every bond row.
struct ForestData {
    std::vector<EdgeId> forest_edges;        // sorted, |F| = r(G)
    std::vector<SignedEdgeVector> circuits;  // one per non-forest edge, by edge id
    std::vector<SignedEdgeVector> bonds;     // one per forest edge, by edge id
    std::vector<int> circuit_index;          // edge id -> row in circuits, or -1
    std::vector<int> bond_index;             // edge id -> row in bonds, or -1

    bool in_forest(EdgeId e) const { return bond_index[static_cast<size_t>(e)] >= 0; }
};

ForestData spanning_forest(const MultiGraph& g);

// True iff U is a cut of g, i.e. |U ∩ C| is even for every circuit C.
// Checked against the fundamental-circuit basis of the cycle space over the
// 2-element field. U must be nonempty.
bool is_cut(const MultiGraph& g, const std::vector<EdgeId>& U);
bool is_cut(const MultiGraph& g, const ForestData& forest, const std::vector<EdgeId>& U);

enum class MinorMode { Delete, Contract };

// Old id -> new id maps recorded by minor(); -1 marks a removed item.
struct MinorTrace {
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};

// Deletes or contracts edge e and renumbers vertices and edges densely and
// deterministically (first-appearance order is preserved). Contraction keeps
// loops created from parallel edges. Contracting a loop is a contract
// violation; callers must branch per the deletion-contraction relation.
MultiGraph minor(const MultiGraph& g, EdgeId e, MinorMode mode, MinorTrace* trace = nullptr);

}  // namespace graphpoly

#endif
