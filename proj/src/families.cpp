#include "plumb/families.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace plumb {

std::string to_string(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F222:
        return "F222";
    case FamilyTag::F2234:
        return "F2234";
    case FamilyTag::F3223:
        return "F3223";
    case FamilyTag::F32333:
        return "F32333";
    }
    return "?";
}

FamilyTag parse_family_tag(const std::string& text)
{
    std::string t = (!text.empty() && (text[0] == 'F' || text[0] == 'f')) ? text.substr(1) : text;
    if (t == "222")
        return FamilyTag::F222;
    if (t == "2234")
        return FamilyTag::F2234;
    if (t == "3223")
        return FamilyTag::F3223;
    if (t == "32333")
        return FamilyTag::F32333;
    throw std::invalid_argument("unknown family tag '" + text + "' (expected 222, 2234, 3223 or 32333)");
}

std::vector<FamilyTag> all_family_tags()
{
    return {FamilyTag::F222, FamilyTag::F2234, FamilyTag::F3223, FamilyTag::F32333};
}

std::size_t pair_count(FamilyTag tag) { return pair_sites(tag).size(); }

std::vector<PairSite> pair_sites(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F222:
        return {{0, 0, 2}};
    case FamilyTag::F2234:
        // (a, alpha) on e3, (b, beta) on e4; both second legs start at the -4.
        return {{2, 2, 3}, {3, 1, 3}};
    case FamilyTag::F3223:
        return {{2, 2, 0}, {0, 1, 3}, {3, 0, 3}};
    case FamilyTag::F32333:
        return {{0, 1, 3}, {3, 2, 4}};
    }
    return {};
}

std::optional<InnerSite> inner_site(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F2234:
        return InnerSite{0, 0, 2, 3};
    case FamilyTag::F32333:
        return InnerSite{4, 0, 3, 4};
    default:
        return std::nullopt;
    }
}

std::vector<std::size_t> handle_pairs(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F2234:
        return {0, 1};
    case FamilyTag::F3223:
        return {0, 2};
    case FamilyTag::F32333:
        return {0};
    default:
        return {};
    }
}

std::size_t expected_corank(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F2234:
    case FamilyTag::F3223:
        return 2;
    case FamilyTag::F32333:
        return 1;
    default:
        return 0;
    }
}

namespace {

EmbeddedGraph linear_embedded(const std::vector<long long>& weights, std::size_t rank,
                              const std::vector<LatticeVector>& vectors)
{
    EmbeddedGraph eg;
    eg.graph = PlumbingGraph::linear(weights);
    eg.embedding.rank = rank;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        eg.embedding.vectors[static_cast<VertexId>(i)] = vectors[i];
    return eg;
}

}  // namespace

EmbeddedGraph base_graph(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::F222:
        // e1-e2, e2-e3, -e1-e2
        return linear_embedded({-2, -2, -2}, 3, {{1, -1, 0}, {0, 1, -1}, {-1, -1, 0}});
    case FamilyTag::F2234:
        // Frozen search result: e1 hits three vertices, e3 and e4 two each.
        return linear_embedded({-2, -2, -3, -4}, 4,
                               {{1, -1, 0, 0}, {0, 1, 0, 1}, {-1, -1, 1, 0}, {1, 1, 1, -1}});
    case FamilyTag::F3223:
        return linear_embedded({-3, -2, -2, -3}, 4,
                               {{0, 1, 1, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, -1, 0, 1}});
    case FamilyTag::F32333:
        return linear_embedded({-3, -2, -3, -3, -3}, 5,
                               {{0, 1, 1, 0, -1},
                                {1, -1, 0, 0, 0},
                                {0, 1, -1, -1, 0},
                                {-1, -1, 0, 0, -1},
                                {0, 0, 1, -1, 1}});
    }
    throw std::invalid_argument("unknown family tag");
}

std::vector<EmbeddedGraph> enumerate_closure(FamilyTag tag, std::size_t max_vertices)
{
    EmbeddedGraph base = base_graph(tag);
    if (max_vertices < base.graph.vertex_count())
        throw std::invalid_argument("enumerate_closure: max_vertices is below the base graph size");
    std::vector<EmbeddedGraph> out{base};
    std::set<std::string> seen{canonical_form(base.graph)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        if (out[i].graph.vertex_count() >= max_vertices)
            continue;
        for (const MoveSite& site : find_move_sites(out[i])) {
            EmbeddedGraph next = apply_move(out[i], site);
            if (seen.insert(canonical_form(next.graph)).second) {
                out.push_back(std::move(next));
                queue.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

void validate_instance(const FamilyInstance& inst)
{
    std::size_t want = pair_count(inst.tag);
    if (inst.pairs.size() != want)
        throw std::invalid_argument(to_string(inst.tag) + " takes " + std::to_string(want) + " pair(s), got " +
                                    std::to_string(inst.pairs.size()));
    for (const auto& p : inst.pairs)
        if (!is_complementary(p.first, p.second))
            throw std::invalid_argument("pair ([" + p.first.str() + "], [" + p.second.str() +
                                        "]) is not complementary");
    if (inst.k < 0)
        throw std::invalid_argument("k must be nonnegative");
    if (inst.k > 0 && !inner_site(inst.tag))
        throw std::invalid_argument(to_string(inst.tag) + " has no inner chain; k must be 0");
}

InstanceGraph build_instance(const FamilyInstance& inst)
{
    validate_instance(inst);
    InstanceGraph out;
    out.embedded = base_graph(inst.tag);

    if (auto inner = inner_site(inst.tag)) {
        MoveSite site{MoveKind::IGOCL, inner->basis_index, {inner->a, inner->b, inner->c}};
        for (int i = 0; i < inst.k; ++i) {
            VertexId d = out.embedded.graph.next_id();
            out.embedded = igocl(out.embedded, site);
            // The new basis vector hits A, the new vertex and C.
            site = MoveSite{MoveKind::IGOCL, out.embedded.embedding.rank - 1, {inner->a, d, inner->c}};
        }
    }

    auto sites = pair_sites(inst.tag);
    for (std::size_t p = 0; p < sites.size(); ++p) {
        VertexId first_end = sites[p].first, second_end = sites[p].second;
        std::size_t e = sites[p].basis_index;
        for (bool right : build_diagram(inst.pairs[p].first).steps()) {
            // A right step lengthens the first leg and bumps the second; down is the reverse.
            VertexId grow = right ? first_end : second_end;
            VertexId shrink = right ? second_end : first_end;
            VertexId c = out.embedded.graph.next_id();
            out.embedded = gocl(out.embedded, MoveSite{MoveKind::GOCL, e, {grow, shrink}});
            e = out.embedded.embedding.rank - 1;
            (right ? first_end : second_end) = c;
        }
        out.free_ends.emplace_back(first_end, second_end);
        out.pair_basis.push_back(e);
    }
    return out;
}

EmbeddedGraph family_instance(const FamilyInstance& inst) { return build_instance(inst).embedded; }

FamilyInstance base_instance(FamilyTag tag)
{
    FamilyInstance inst;
    inst.tag = tag;
    inst.pairs.assign(pair_count(tag), ComplementaryPair{CFSeq{2}, CFSeq{2}});
    return inst;
}

HandleExtendedGraph attach_handles_on(const FamilyInstance& inst, const std::vector<std::size_t>& pairs)
{
    InstanceGraph ig = build_instance(inst);
    HandleExtendedGraph h;
    h.base = ig.embedded.graph;
    h.graph = h.base;
    auto normal = normalized_embedding(ig.embedded.graph, ig.embedded.embedding);
    if (!normal)
        throw std::logic_error("attach_handles: instance embedding does not verify");
    std::map<VertexId, LatticeVector> vectors = normal->vectors;
    for (std::size_t p : pairs) {
        if (p >= ig.free_ends.size())
            throw std::invalid_argument("attach_handles: pair index out of range");
        VertexId v = h.graph.add_vertex(-1);
        h.graph.add_edge(v, ig.free_ends[p].first);
        h.graph.add_edge(v, ig.free_ends[p].second);
        h.handle_ids.push_back(v);
        LatticeVector unit(normal->rank, 0);
        unit[ig.pair_basis[p]] = 1;
        vectors[v] = unit;
    }
    auto ids = h.graph.vertex_ids();
    h.matrix = IntMatrix(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j)
            h.matrix(i, j) = static_cast<long>(-dot(vectors.at(ids[i]), vectors.at(ids[j])));
    return h;
}

HandleExtendedGraph attach_handles(const FamilyInstance& inst)
{
    if (inst.tag == FamilyTag::F222)
        throw std::invalid_argument("attach_handles: F222 has no handle construction");
    return attach_handles_on(inst, handle_pairs(inst.tag));
}

QHBCertificate qhb_certificate(const FamilyInstance& inst)
{
    QHBCertificate cert;
    InstanceGraph ig = build_instance(inst);
    cert.embedding_verified = verify_embedding(ig.embedded.graph, ig.embedded.embedding);
    if (!cert.embedding_verified)
        cert.failures.push_back("embedding does not realise the intersection form");
    cert.det = abs(det(intersection_matrix(ig.embedded.graph)));
    if (is_perfect_square(cert.det))
        cert.det_sqrt = isqrt(cert.det);
    else
        cert.failures.push_back("|det| " + cert.det.get_str() + " is not a perfect square");
    if (inst.tag != FamilyTag::F222) {
        HandleExtendedGraph h = attach_handles(inst);
        cert.has_handles = true;
        cert.handle_snf = smith_normal_form(h.matrix);
        cert.corank = cert.handle_snf.corank();
        cert.expected_corank = expected_corank(inst.tag);
        cert.free_cokernel = cert.handle_snf.free_cokernel();
        if (cert.corank != cert.expected_corank)
            cert.failures.push_back("handle matrix corank " + std::to_string(cert.corank) + ", expected " +
                                    std::to_string(cert.expected_corank));
        if (!cert.free_cokernel)
            cert.failures.push_back("handle matrix cokernel has torsion");
    }
    return cert;
}

}  // namespace plumb
