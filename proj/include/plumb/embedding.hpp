#pragma once

// Embeddings of intersection lattices into (Z^N, -Id), the GOCL / IGOCL growth
// moves, and exhaustive embedding search.

#include "plumb/cfrac.hpp"
#include "plumb/graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace plumb {

using LatticeVector = std::vector<long long>;

struct LatticeEmbedding {
    std::size_t rank = 0;
    std::map<VertexId, LatticeVector> vectors;

    friend bool operator==(const LatticeEmbedding&, const LatticeEmbedding&) = default;
};

struct EmbeddedGraph {
    PlumbingGraph graph;
    LatticeEmbedding embedding;
};

enum class MoveKind { GOCL, IGOCL };

/// basis_index is 0-based. role_ids is (A, B) for GOCL: leaf grows on A and B
/// loses one. For IGOCL it is (A, B, C): a new -2 goes between B and C and A loses one.
struct MoveSite {
    MoveKind kind = MoveKind::GOCL;
    std::size_t basis_index = 0;
    std::vector<VertexId> role_ids;

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Euclidean dot product. Lattice pairings are its negative.
long long dot(const LatticeVector& a, const LatticeVector& b);

/// Same embedding with whole vectors negated so that every edge pairs to +1
/// (dot -1); nullopt if no sign choice realises the intersection form.
/// Throws std::invalid_argument on a missing vector or a rank mismatch.
std::optional<LatticeEmbedding> normalized_embedding(const PlumbingGraph& g, const LatticeEmbedding& f);
bool verify_embedding(const PlumbingGraph& g, const LatticeEmbedding& f);

/// Two disjoint paths carrying -s and -t, embedded by growing from
/// (e1+e2, e1-e2) along the staircase of s. Vertex ids: s in order, then t.
EmbeddedGraph embed_complementary_legs(const CFSeq& s, const CFSeq& t);

/// Backtracking search for an embedding in rank `rank` with coefficients in
/// [-coeff_bound, coeff_bound]. `accept`, if given, can veto complete embeddings.
/// Throws std::invalid_argument if g has a positive direction.
std::optional<LatticeEmbedding> search_embedding(const PlumbingGraph& g, std::size_t rank, long long coeff_bound,
                                                 const std::function<bool(const LatticeEmbedding&)>& accept = {});
/// Default coefficient bound: floor(sqrt(max |weight|)).
long long default_coeff_bound(const PlumbingGraph& g);

/// Vertices whose vector has a nonzero coefficient at basis index i.
std::vector<VertexId> hits(const EmbeddedGraph& eg, std::size_t i);

std::vector<MoveSite> find_move_sites(const EmbeddedGraph& eg);
bool is_valid_site(const EmbeddedGraph& eg, const MoveSite& site);

/// Result vertices get fresh ids from graph.next_id(); the new basis vector
/// is appended as the last coordinate. Both throw MoveError on a bad site.
EmbeddedGraph gocl(const EmbeddedGraph& eg, const MoveSite& site);
EmbeddedGraph igocl(const EmbeddedGraph& eg, const MoveSite& site);
EmbeddedGraph apply_move(const EmbeddedGraph& eg, const MoveSite& site);

}  // namespace plumb
