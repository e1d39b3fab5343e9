#include "doctest.h"
#include "oracles.hpp"

#include "plumb/cfrac.hpp"
#include "plumb/exactnum.hpp"

#include <random>

using namespace plumb;

namespace {

IntMatrix linear_matrix(const std::vector<long>& w)
{
    IntMatrix m(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        m(i, i) = w[i];
        if (i + 1 < w.size()) {
            m(i, i + 1) = 1;
            m(i + 1, i) = 1;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rational values are reduced")
{
    Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
    CHECK(Rational(Integer(-7), Integer(2)).ceil() == -3);
    CHECK_THROWS(Rational(Integer(1), Integer(0)));
    CHECK_THROWS(Rational::parse("3/x"));
    CHECK_THROWS(Rational(0).reciprocal());
}

TEST_CASE("det small cases")
{
    CHECK(det(IntMatrix{{-2, 1}, {1, -2}}) == 3);
    CHECK(det(IntMatrix{{-1}}) == -1);
    Integer d = det(linear_matrix({-2, -2, -3, -4}));
    CHECK(abs(d) == 25);
    CHECK(eval_ncf(CFSeq{2, 2, 3, 4}).num() == 25);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("negative definiteness")
{
    CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{0}}));
    CHECK_FALSE(is_negative_definite(linear_matrix({-2, -1, -2})));
    CHECK(det(linear_matrix({-2, -1, -2})) == 0);
    CHECK_THROWS_AS(is_negative_definite(IntMatrix{{-2, 1}, {0, -2}}), std::invalid_argument);
}

TEST_CASE("smith normal form small cases")
{
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).invariant_factors ==
          std::vector<Integer>{1, 1, 1});
    auto s = smith_normal_form(linear_matrix({-2, -1, -2}));
    CHECK(s.invariant_factors == std::vector<Integer>{1, 1, 0});
    CHECK(s.corank() == 1);
    CHECK(s.free_cokernel());
}

TEST_CASE("det matches cofactor expansion on random matrices")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
    for (int t = 0; t < 500; ++t) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                m(i, j) = entry(rng);
        REQUIRE(det(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("SNF product equals |det| and matches determinantal divisors")
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    for (int t = 0; t < 1000; ++t) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                m(i, j) = entry(rng);
        auto f = smith_normal_form(m).invariant_factors;
        Integer d = det(m);
        if (d != 0) {
            Integer prod = 1;
            for (const auto& x : f)
                prod *= x;
            REQUIRE(prod == abs(d));
        }
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] != 0 && f[i + 1] != 0)
                REQUIRE(mpz_divisible_p(f[i + 1].get_mpz_t(), f[i].get_mpz_t()));
        if (m.dim() <= 4)
            REQUIRE(f == oracle::snf_by_minors(m));
    }
}

TEST_CASE("linear graph determinant equals continued fraction numerator")
{
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> len(1, 8), entry(2, 7);
    for (int t = 0; t < 500; ++t) {
        std::vector<long> w;
        std::vector<long long> a;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            a.push_back(entry(rng));
            w.push_back(-a.back());
        }
        IntMatrix m = linear_matrix(w);
        REQUIRE(abs(det(m)) == eval_ncf(CFSeq(a)).num());
        REQUIRE(is_negative_definite(m));
    }
}

TEST_CASE("inertia agrees with eigenvalue signs")
{
    std::mt19937 rng(14);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int t = 0; t < 300; ++t) {
        IntMatrix m = oracle::random_symmetric(rng, static_cast<std::size_t>(dim(rng)), -3, 3);
        Inertia in = inertia(m);
        auto ref = oracle::eigen_inertia(m);
        REQUIRE(in.positive == ref.positive);
        REQUIRE(in.negative == ref.negative);
        REQUIRE(in.zero == ref.zero);
        REQUIRE(is_negative_definite(m) == (in.negative == m.dim()));
    }
}
