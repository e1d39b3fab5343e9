#pragma once

// The four linear base graphs with their embeddings, growth by GOCL / IGOCL,
// parameterised instances, -1 handle extensions and homology certificates.

#include "plumb/embedding.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plumb {

enum class FamilyTag { F222, F2234, F3223, F32333 };

std::string to_string(FamilyTag tag);
/// Accepts "2234" or "F2234".
FamilyTag parse_family_tag(const std::string& text);
std::vector<FamilyTag> all_family_tags();

struct ComplementaryPair {
    CFSeq first;
    CFSeq second;
    friend bool operator==(const ComplementaryPair&, const ComplementaryPair&) = default;
};

struct FamilyInstance {
    FamilyTag tag = FamilyTag::F2234;
    std::vector<ComplementaryPair> pairs;
    int k = 0;  // length of the inner -2 chain; only F2234 and F32333 use it
};

/// Where a pair of legs grows in the base graph: the basis vector hitting
/// exactly the two base vertices that carry the legs.
struct PairSite {
    std::size_t basis_index;
    VertexId first;
    VertexId second;
};

/// Where the inner chain grows: IGOCL roles (A, B, C) on a basis vector.
struct InnerSite {
    std::size_t basis_index;
    VertexId a, b, c;
};

std::size_t pair_count(FamilyTag tag);
std::vector<PairSite> pair_sites(FamilyTag tag);
std::optional<InnerSite> inner_site(FamilyTag tag);
/// Indices (into pair_sites) of the pairs that receive a -1 handle.
std::vector<std::size_t> handle_pairs(FamilyTag tag);
/// Corank the handle-extended matrix must have.
std::size_t expected_corank(FamilyTag tag);

EmbeddedGraph base_graph(FamilyTag tag);

/// Breadth-first closure under every GOCL / IGOCL site, one representative per
/// isomorphism class of graph, up to max_vertices vertices.
std::vector<EmbeddedGraph> enumerate_closure(FamilyTag tag, std::size_t max_vertices);

struct InstanceGraph {
    EmbeddedGraph embedded;
    /// Per pair, the current end vertices of its two legs.
    std::vector<std::pair<VertexId, VertexId>> free_ends;
    /// Per pair, the basis vector hitting exactly those two ends.
    std::vector<std::size_t> pair_basis;
};

/// Throws std::invalid_argument on a wrong pair count, non-complementary pairs
/// or a k the family does not use.
void validate_instance(const FamilyInstance& inst);
InstanceGraph build_instance(const FamilyInstance& inst);
EmbeddedGraph family_instance(const FamilyInstance& inst);

/// Trivial pairs ([2],[2]) and k = 0.
FamilyInstance base_instance(FamilyTag tag);

struct HandleExtendedGraph {
    PlumbingGraph base;
    PlumbingGraph graph;  // base plus handles
    std::vector<VertexId> handle_ids;
    /// Pairings of the instance vectors together with one unit vector per
    /// handle; rows ordered by ascending id of `graph`.
    IntMatrix matrix;
};

/// One -1 vertex joined to the two free ends of each handle pair. The handle's
/// vector is the basis vector hitting those ends, which fixes the edge signs
/// around the cycle it closes.
/// Throws std::invalid_argument for F222.
HandleExtendedGraph attach_handles(const FamilyInstance& inst);
HandleExtendedGraph attach_handles_on(const FamilyInstance& inst, const std::vector<std::size_t>& pairs);

struct QHBCertificate {
    bool embedding_verified = false;
    Integer det;  // |det| of the instance matrix
    std::optional<Integer> det_sqrt;
    bool has_handles = false;
    SNFResult handle_snf;
    std::size_t corank = 0;
    std::size_t expected_corank = 0;
    bool free_cokernel = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

QHBCertificate qhb_certificate(const FamilyInstance& inst);

}  // namespace plumb
