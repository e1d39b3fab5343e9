#include "doctest.h"

#include "plumb/families.hpp"

#include <random>

using namespace plumb;

namespace {

Integer absdet(const PlumbingGraph& g) { return abs(det(intersection_matrix(g))); }

bool is_linear(const PlumbingGraph& g)
{
    if (!g.is_tree())
        return false;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) > 2)
            return false;
    return true;
}

std::vector<long long> path_entries(const PlumbingGraph& g)
{
    VertexId start = -1;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<long long> out;
    VertexId prev = -1, cur = start;
    for (;;) {
        out.push_back(-g.weight(cur));
        VertexId next = -1;
        for (VertexId u : g.neighbors(cur))
            if (u != prev)
                next = u;
        if (next < 0)
            return out;
        prev = cur;
        cur = next;
    }
}

// L(P, Q) with P = p^2 and Q (or its inverse mod P) equal to p*q +- 1 for some p > q > 0.
bool is_square_lens(const Integer& P, const Integer& Q)
{
    if (!is_perfect_square(P))
        return false;
    Integer p = isqrt(P);
    Integer Qinv;
    mpz_invert(Qinv.get_mpz_t(), Q.get_mpz_t(), P.get_mpz_t());
    for (Integer q = 1; q < p; ++q) {
        Integer a = p * q + 1, b = p * q - 1;
        for (const Integer& x : {Q, Qinv})
            if (x == a % P || x == b % P)
                return true;
    }
    return false;
}

CFSeq random_seq(std::mt19937& rng, int max_len, int max_entry)
{
    std::uniform_int_distribution<int> len(1, max_len), entry(2, max_entry);
    std::vector<long long> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v)
        x = entry(rng);
    return CFSeq(v);
}

FamilyInstance random_instance(std::mt19937& rng, FamilyTag tag, std::size_t max_vertices)
{
    for (;;) {
        FamilyInstance inst;
        inst.tag = tag;
        std::size_t n = base_graph(tag).graph.vertex_count();
        for (std::size_t p = 0; p < pair_count(tag); ++p) {
            CFSeq s = random_seq(rng, 3, 4);
            CFSeq t = riemenschneider_dual(s);
            n += s.size() + t.size() - 2;
            inst.pairs.push_back({s, t});
        }
        if (inner_site(tag)) {
            inst.k = std::uniform_int_distribution<int>(0, 3)(rng);
            n += static_cast<std::size_t>(inst.k);
        }
        if (n <= max_vertices)
            return inst;
    }
}

FamilyInstance flagship(int k)
{
    return FamilyInstance{FamilyTag::F2234, {{CFSeq{3}, CFSeq{2, 2}}, {CFSeq{4}, CFSeq{2, 2, 2}}}, k};
}

}  // namespace

TEST_CASE("tags parse")
{
    CHECK(parse_family_tag("2234") == FamilyTag::F2234);
    CHECK(parse_family_tag("F32333") == FamilyTag::F32333);
    CHECK_THROWS(parse_family_tag("2235"));
    for (auto t : all_family_tags())
        CHECK(parse_family_tag(to_string(t)) == t);
}

TEST_CASE("base graphs")
{
    auto b222 = base_graph(FamilyTag::F222);
    CHECK(b222.graph == PlumbingGraph::linear({-2, -2, -2}));
    CHECK(b222.embedding.vectors.at(2) == LatticeVector{-1, -1, 0});
    auto b3223 = base_graph(FamilyTag::F3223);
    CHECK(b3223.graph == PlumbingGraph::linear({-3, -2, -2, -3}));
    CHECK(b3223.embedding.vectors.at(0) == LatticeVector{0, 1, 1, 1});
    auto b2234 = base_graph(FamilyTag::F2234);
    CHECK(b2234.graph == PlumbingGraph::linear({-2, -2, -3, -4}));
    CHECK(verify_embedding(b2234.graph, b2234.embedding));
    CHECK(hits(b2234, 0).size() == 3);
    CHECK(hits(b2234, 2).size() == 2);
    CHECK(hits(b2234, 3).size() == 2);
    CHECK(base_graph(FamilyTag::F32333).graph == PlumbingGraph::linear({-3, -2, -3, -3, -3}));
}

TEST_CASE("closure contents")
{
    for (const auto& eg : enumerate_closure(FamilyTag::F222, 4))
        CHECK(is_linear(eg.graph));

    auto c2234 = enumerate_closure(FamilyTag::F2234, 5);
    auto contains = [&](const PlumbingGraph& g) {
        return std::any_of(c2234.begin(), c2234.end(), [&](const EmbeddedGraph& e) { return is_isomorphic(e.graph, g); });
    };
    CHECK(contains(PlumbingGraph::linear({-3, -2, -3, -2, -4})));
    CHECK(contains(gocl(base_graph(FamilyTag::F2234), MoveSite{MoveKind::GOCL, 3, {3, 1}}).graph));
    CHECK_THROWS(enumerate_closure(FamilyTag::F32333, 4));

    for (auto tag : all_family_tags())
        for (const auto& eg : enumerate_closure(tag, 9)) {
            REQUIRE(verify_embedding(eg.graph, eg.embedding));
            REQUIRE(is_perfect_square(absdet(eg.graph)));
        }
}

TEST_CASE("F222 closure is made of square lens spaces")
{
    for (const auto& eg : enumerate_closure(FamilyTag::F222, 10)) {
        REQUIRE(is_linear(eg.graph));
        Rational r = eval_ncf(CFSeq(path_entries(eg.graph)));
        REQUIRE(is_square_lens(r.num(), r.den()));
    }
}

TEST_CASE("instances")
{
    auto f0 = family_instance(flagship(0)).graph;
    CHECK(f0.vertex_count() == 7);
    CHECK(absdet(f0) == 400);
    auto d = star_decompose(f0);
    REQUIRE(d.node.has_value());
    CHECK(d.node_weight == -4);
    auto legs = d.legs;
    std::sort(legs.begin(), legs.end());
    CHECK(legs == std::vector<std::vector<long long>>{{2}, {2, 2}, {2, 4, 4}});

    auto b = family_instance(base_instance(FamilyTag::F2234));
    CHECK(b.graph == base_graph(FamilyTag::F2234).graph);
    CHECK(b.embedding == base_graph(FamilyTag::F2234).embedding);

    FamilyInstance g = base_instance(FamilyTag::F32333);
    g.k = 2;
    auto h = family_instance(g).graph;
    CHECK(h.vertex_count() == 7);
    CHECK(is_perfect_square(absdet(h)));

    CHECK_THROWS_AS(family_instance(FamilyInstance{FamilyTag::F2234, {{CFSeq{3}, CFSeq{3}}, {CFSeq{2}, CFSeq{2}}}, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_instance(FamilyInstance{FamilyTag::F2234, {{CFSeq{2}, CFSeq{2}}}, 0}), std::invalid_argument);
    FamilyInstance bad = base_instance(FamilyTag::F3223);
    bad.k = 1;
    CHECK_THROWS_AS(family_instance(bad), std::invalid_argument);
}

TEST_CASE("instances lie in the closure")
{
    std::mt19937 rng(51);
    for (auto tag : all_family_tags()) {
        auto closure = enumerate_closure(tag, 12);
        std::set<std::string> forms;
        for (const auto& eg : closure)
            forms.insert(canonical_form(eg.graph));
        for (int t = 0; t < 40; ++t) {
            FamilyInstance inst = random_instance(rng, tag, 12);
            auto eg = family_instance(inst);
            REQUIRE(eg.graph.vertex_count() <= 12);
            REQUIRE(forms.count(canonical_form(eg.graph)) == 1);
        }
    }
}

TEST_CASE("handle extensions")
{
    auto h = attach_handles(base_instance(FamilyTag::F2234));
    CHECK(h.graph.vertex_count() == 6);
    CHECK(h.handle_ids.size() == 2);
    for (VertexId v : h.handle_ids) {
        CHECK(h.graph.weight(v) == -1);
        CHECK(h.graph.degree(v) == 2);
    }
    CHECK(smith_normal_form(h.matrix).invariant_factors == std::vector<Integer>{1, 1, 1, 1, 0, 0});

    auto h3 = attach_handles(base_instance(FamilyTag::F3223));
    CHECK(smith_normal_form(h3.matrix).corank() == 2);
    CHECK(smith_normal_form(h3.matrix).free_cokernel());
    auto h5 = attach_handles(base_instance(FamilyTag::F32333));
    CHECK(h5.handle_ids.size() == 1);
    CHECK(smith_normal_form(h5.matrix).corank() == 1);
    CHECK_THROWS_AS(attach_handles(base_instance(FamilyTag::F222)), std::invalid_argument);

    // The matrix agrees with the graph away from the handle rows.
    IntMatrix base = intersection_matrix(h.base);
    for (std::size_t i = 0; i < base.dim(); ++i)
        for (std::size_t j = 0; j < base.dim(); ++j)
            CHECK(h.matrix(i, j) == base(i, j));
}

TEST_CASE("certificates")
{
    auto c = qhb_certificate(flagship(0));
    CHECK(c.passed());
    CHECK(c.det == 400);
    REQUIRE(c.det_sqrt.has_value());
    CHECK(*c.det_sqrt == 20);
    CHECK(c.corank == 2);
    CHECK(qhb_certificate(base_instance(FamilyTag::F32333)).corank == 1);
    for (int k = 0; k <= 5; ++k)
        CHECK(qhb_certificate(flagship(k)).det == Integer((11 * k + 20) * (11 * k + 20)));

    std::mt19937 rng(52);
    for (auto tag : all_family_tags())
        for (int t = 0; t < 50; ++t) {
            auto inst = random_instance(rng, tag, 15);
            auto cert = qhb_certificate(inst);
            REQUIRE(cert.embedding_verified);
            REQUIRE(cert.passed());
        }
}
