#include "doctest.h"

#include <random>

#include "steenrod2/poly.hpp"

using namespace st2;

namespace {

AlgebraPtr uv() { return Algebra::make({{"u", 1}, {"v", 1}}); }

Poly random_poly(const AlgebraPtr& a, std::mt19937& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    Poly p(a);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Poly m = Poly::one(a);
        for (std::size_t v = 0; v < a->size(); ++v) m *= Poly::var(a, static_cast<int>(v)).pow(static_cast<std::uint64_t>(expo(rng)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("F2 addition is symmetric difference") {
    auto a = uv();
    Poly p = parse_poly(a, "u^2 + u*v");
    Poly q = parse_poly(a, "u*v + v^2");
    CHECK((p + q) == parse_poly(a, "u^2 + v^2"));
    CHECK((p + p).is_zero());
    CHECK((p + Poly::zero(a)) == p);
}

TEST_CASE("multiplication basics") {
    auto a = uv();
    Poly s = parse_poly(a, "u + v");
    CHECK(s * s == parse_poly(a, "u^2 + v^2"));  // Frobenius
    Poly m = parse_poly(a, "u*v");
    CHECK(m * m == parse_poly(a, "u^2*v^2"));
}

TEST_CASE("cube of u^2*v + u*v^2 matches iterated multiplication") {
    auto a = uv();
    Poly p = parse_poly(a, "u^2*v + u*v^2");
    CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("mismatched algebras rejected") {
    auto a = uv();
    auto b = uv();
    CHECK_THROWS_AS(parse_poly(a, "u") + parse_poly(b, "u"), std::invalid_argument);
}

TEST_CASE("substitution") {
    auto a = uv();
    SUBCASE("diagonal pullback") {
        Poly p = parse_poly(a, "u*v");
        Poly out = substitute(p, a, {{1, parse_poly(a, "u")}});
        CHECK(out == parse_poly(a, "u^2"));
    }
    SUBCASE("kill a variable") {
        Poly p = parse_poly(a, "u^2 + u*v + v^2");
        Poly out = substitute(p, a, {{1, Poly::zero(a)}});
        CHECK(out == parse_poly(a, "u^2"));
    }
    SUBCASE("shear agrees with direct expansion") {
        Poly p = parse_poly(a, "u*v") * parse_poly(a, "u + v");
        Poly sheared = substitute(p, a, {{0, parse_poly(a, "u + v")}});
        Poly direct = parse_poly(a, "u + v") * parse_poly(a, "v") *
                      (parse_poly(a, "u + v") + parse_poly(a, "v"));
        CHECK(sheared == direct);
    }
    SUBCASE("wrong-degree image rejected") {
        Poly p = parse_poly(a, "u*v");
        CHECK_THROWS_AS(substitute(p, a, {{0, parse_poly(a, "u^2")}}), std::invalid_argument);
    }
}

TEST_CASE("substitution is a ring homomorphism (random)") {
    auto a = uv();
    std::mt19937 rng(7);
    std::map<int, Poly> images{{0, parse_poly(a, "u + v")}, {1, parse_poly(a, "v")}};
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_poly(a, rng, 4, 4);
        Poly q = random_poly(a, rng, 4, 4);
        CHECK(substitute(p * q, a, images) == substitute(p, a, images) * substitute(q, a, images));
        CHECK(substitute(p + q, a, images) == substitute(p, a, images) + substitute(q, a, images));
        CHECK((p + q).square() == p.square() + q.square());
    }
}

TEST_CASE("parse/print round trip") {
    auto a = Algebra::make({{"u", 1}, {"v", 1}, {"w", 1}});
    for (const char* s : {"0", "1", "u", "u^3*v + v^2", "u^2 + u*v + v^2", "u*v*w + w^3"}) {
        Poly p = parse_poly(a, s);
        CHECK(parse_poly(a, p.str()) == p);
        CHECK(p.str() == s);
    }
}

TEST_CASE("large exponents are exact") {
    auto a = uv();
    Poly p = Poly::var(a, 0).pow(1u << 20);
    CHECK(p.degree() == (1 << 20));
    CHECK(p * p == Poly::var(a, 0).pow(1u << 21));
}

TEST_CASE("free_algebra_dims") {
    CHECK(free_algebra_dims({1}, 4) == std::vector<unsigned long long>{1, 1, 1, 1, 1});
    CHECK(free_algebra_dims({2, 3}, 6) == std::vector<unsigned long long>{1, 0, 1, 1, 1, 1, 2});
    CHECK(free_algebra_dims({2, 3, 5, 9, 17}, 6) ==
          std::vector<unsigned long long>{1, 0, 1, 1, 1, 2, 2});
}

TEST_CASE("free_algebra_dims agrees with brute-force monomial enumeration") {
    std::vector<long long> degs{2, 3, 5};
    auto dims = free_algebra_dims(degs, 20);
    for (long long d = 0; d <= 20; ++d) {
        unsigned long long count = 0;
        for (long long a = 0; 2 * a <= d; ++a)
            for (long long b = 0; 2 * a + 3 * b <= d; ++b)
                if ((d - 2 * a - 3 * b) % 5 == 0) ++count;
        CHECK(dims[static_cast<std::size_t>(d)] == count);
    }
}
