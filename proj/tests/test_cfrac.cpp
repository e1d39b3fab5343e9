#include "doctest.h"

#include "plumb/cfrac.hpp"

#include <random>

using namespace plumb;

namespace {

CFSeq random_seq(std::mt19937& rng, int max_len, int max_entry)
{
    std::uniform_int_distribution<int> len(1, max_len), entry(2, max_entry);
    std::vector<long long> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v)
        x = entry(rng);
    return CFSeq(v);
}

Rational q(long a, long b) { return Rational(Integer(a), Integer(b)); }

}  // namespace

TEST_CASE("eval_ncf")
{
    CHECK(eval_ncf(CFSeq{5, 3, 2, 2}) == q(32, 7));
    CHECK(eval_ncf(CFSeq{9}) == Rational(9));
    CHECK(eval_ncf(CFSeq{2, 2, 2}) == q(4, 3));
    std::vector<long long> general{3, -1, 2};
    CHECK(eval_ncf(std::span<const long long>(general)) == q(11, 3));
    std::vector<long long> zero_tail{2, 0};
    try {
        eval_ncf(std::span<const long long>(zero_tail));
        FAIL("expected a zero tail");
    } catch (const ZeroTailError& e) {
        CHECK(e.suffix() == std::vector<long long>{0});
    }
    std::vector<long long> inner{3, 1, 1};
    CHECK_THROWS_AS(eval_ncf(std::span<const long long>(inner)), ZeroTailError);
}

TEST_CASE("expand_ncf")
{
    CHECK(expand_ncf(q(32, 7)) == CFSeq{5, 3, 2, 2});
    CHECK(expand_ncf(q(9, 7)) == CFSeq{2, 2, 2, 3});
    CHECK(expand_ncf(Rational(4)) == CFSeq{4});
    CHECK_THROWS(expand_ncf(Rational(1)));
    CHECK_THROWS(expand_ncf(q(1, 2)));
    auto g = expand_ncf_general(q(-71, 172));
    CHECK(g.front() == 0);
    CHECK(eval_ncf(std::span<const long long>(g)) == q(-71, 172));
}

TEST_CASE("expand_ncf_general round trips with unrestricted first entry")
{
    std::mt19937 rng(21);
    std::uniform_int_distribution<long> num(-2000, 2000), den(1, 300);
    for (int t = 0; t < 1000; ++t) {
        Rational r(Integer(num(rng)), Integer(den(rng)));
        auto e = expand_ncf_general(r);
        for (std::size_t i = 1; i < e.size(); ++i)
            REQUIRE(e[i] >= 2);
        REQUIRE(eval_ncf(std::span<const long long>(e)) == r);
    }
}

TEST_CASE("diagram construction")
{
    auto d = build_diagram(CFSeq{2});
    CHECK(d.points() == std::vector<DiagramPoint>{{1, -1}});
    auto flag = build_diagram(CFSeq{5, 3, 2, 2});
    // m + n - 1 points for sequences of total excess (5-1)+(3-1)+1+1 = 8.
    CHECK(flag.points().size() == 8);
    CHECK(flag.column_sequence() == CFSeq{5, 3, 2, 2});
    CHECK(flag.row_sequence() == CFSeq{2, 2, 2, 3, 4});
    auto d222 = build_diagram(CFSeq{2, 2, 2});
    CHECK(d222.points() == std::vector<DiagramPoint>{{1, -1}, {2, -1}, {3, -1}});
    CHECK(d222.row_sequence() == CFSeq{4});
    CHECK_THROWS(RDiagram({{1, -1}, {2, -2}}));
    CHECK_THROWS(RDiagram({{2, -1}}));
}

TEST_CASE("duality and complementarity examples")
{
    CHECK(riemenschneider_dual(CFSeq{5, 3, 2, 2}) == CFSeq{2, 2, 2, 3, 4});
    CHECK(riemenschneider_dual(CFSeq{2}) == CFSeq{2});
    CHECK(riemenschneider_dual(CFSeq{3, 2}) == CFSeq{2, 3});
    CHECK(is_complementary(CFSeq{5, 3, 2, 2}, CFSeq{2, 2, 2, 3, 4}));
    CHECK(is_complementary(CFSeq{2}, CFSeq{2}));
    CHECK(is_complementary(CFSeq{3}, CFSeq{2, 2}));
    CHECK_FALSE(is_complementary(CFSeq{3}, CFSeq{3}));
}

TEST_CASE("dual is an involution and complementary")
{
    std::mt19937 rng(22);
    for (int t = 0; t < 1000; ++t) {
        CFSeq s = random_seq(rng, 10, 6);
        CFSeq d = riemenschneider_dual(s);
        REQUIRE(riemenschneider_dual(d) == s);
        REQUIRE(is_complementary(s, d));
        // Reversed pairs stay complementary.
        REQUIRE(is_complementary(s.reversed(), d.reversed()));
        // p/q dualises to p/(p-q).
        Rational v = eval_ncf(s);
        REQUIRE(eval_ncf(d) == Rational(v.num(), v.num() - v.den()));
    }
}

TEST_CASE("expand then evaluate is the identity")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (int t = 0; t < 1000; ++t) {
        long a = dist(rng), b = dist(rng);
        if (a == b)
            continue;
        Rational r(Integer(std::max(a, b)), Integer(std::min(a, b)));
        REQUIRE(eval_ncf(expand_ncf(r)) == r);
    }
}

TEST_CASE("sequence parsing")
{
    CHECK(parse_sequence("5,3,2,2") == std::vector<long long>{5, 3, 2, 2});
    CHECK_THROWS(parse_sequence("5,,2"));
    CHECK_THROWS(parse_sequence("a"));
    CHECK(format_sequence(std::vector<long long>{2, 3}) == "2,3");
}
