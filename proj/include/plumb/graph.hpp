#pragma once

// Weighted plumbing graphs and the graph-level plumbing calculus.

#include "plumb/cfrac.hpp"
#include "plumb/exactnum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace plumb {

using VertexId = int;

/// Simple weighted graph. Vertex ids are unique nonnegative integers; the
/// intersection matrix orders rows by ascending id.
class PlumbingGraph {
public:
    PlumbingGraph() = default;

    /// Linear graph with ids 0..n-1 carrying the given weights.
    static PlumbingGraph linear(const std::vector<long long>& weights);

    VertexId add_vertex(long long weight);
    void add_vertex(VertexId id, long long weight);
    void remove_vertex(VertexId v);
    void add_edge(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);

    bool has_vertex(VertexId v) const { return weights_.count(v) != 0; }
    bool has_edge(VertexId a, VertexId b) const;
    long long weight(VertexId v) const;
    void set_weight(VertexId v, long long w);
    std::size_t degree(VertexId v) const;
    const std::set<VertexId>& neighbors(VertexId v) const;

    std::size_t vertex_count() const { return weights_.size(); }
    std::size_t edge_count() const;
    std::vector<VertexId> vertex_ids() const;
    /// Edges (a, b) with a < b, ascending.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    VertexId next_id() const { return weights_.empty() ? 0 : weights_.rbegin()->first + 1; }

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const { return is_connected() && is_forest(); }

    /// Every weight negated; describes the orientation-reversed boundary.
    PlumbingGraph mirrored() const;
    /// Same graph with ids renumbered 0..n-1 in ascending order of the old ids.
    PlumbingGraph compacted() const;

    friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

private:
    std::map<VertexId, long long> weights_;
    std::map<VertexId, std::set<VertexId>> adj_;
};

/// Thrown when a calculus move's precondition fails.
class MoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

IntMatrix intersection_matrix(const PlumbingGraph& g);

/// Removes a vertex of weight -1 (or +1) of degree <= 2, shifting neighbor
/// weights by +1 (or -1) and joining the two neighbors of a degree-2 vertex.
PlumbingGraph blow_down(const PlumbingGraph& g, VertexId v);

struct BlowUpNowhere {};
struct BlowUpAtVertex {
    VertexId v;
};
struct BlowUpOnEdge {
    VertexId a;
    VertexId b;
};
using BlowUpSite = std::variant<BlowUpNowhere, BlowUpAtVertex, BlowUpOnEdge>;

/// Inserts a new vertex of weight `sign` (-1 or +1); returns the graph and the new id.
std::pair<PlumbingGraph, VertexId> blow_up(const PlumbingGraph& g, const BlowUpSite& site, int sign = -1);

/// Removes a weight-0 vertex of degree 2 and merges its two neighbors.
/// The merged vertex keeps the smaller id.
PlumbingGraph zero_absorption(const PlumbingGraph& g, VertexId v);

struct GraphStats {
    long long i_invariant = 0;
    std::size_t b2_plus = 0;
    std::size_t b2_minus = 0;
};

struct StatsDelta {
    long long b2_plus = 0;
    long long b2_minus = 0;
};

struct ChainReversal {
    PlumbingGraph graph;
    StatsDelta delta;
    std::vector<VertexId> new_chain;
};

/// Replaces an induced chain with weights (-a1..-ak), all ai >= 2, by its
/// complementary positive chain (b1..bj) and raises each outside neighbor of the
/// chain by 1. A chain with all weights >= 2 is turned negative symmetrically.
/// The first entry of the new chain attaches where the first old entry did.
ChainReversal reverse_chain(const PlumbingGraph& g, const std::vector<VertexId>& chain);

long long i_invariant(const PlumbingGraph& g);
GraphStats graph_stats(const PlumbingGraph& g);

/// Node plus legs of a star-shaped tree. Legs are listed leaf-first as
/// continued-fraction entries (negated weights); the last entry of each leg is
/// adjacent to the node. A path is degenerate: no node and a single leg that is
/// the whole path.
struct StarDecomposition {
    std::optional<VertexId> node;
    long long node_weight = 0;
    std::vector<std::vector<long long>> legs;
    std::vector<std::vector<VertexId>> leg_ids;
};

StarDecomposition star_decompose(const PlumbingGraph& g);

/// Star decomposition around a chosen vertex of degree <= 3 in a tree whose
/// other vertices have degree <= 2.
StarDecomposition star_decompose_at(const PlumbingGraph& g, VertexId node);

/// Certificate string equal for two graphs iff they are isomorphic as weighted graphs.
std::string canonical_form(const PlumbingGraph& g);
bool is_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

}  // namespace plumb
