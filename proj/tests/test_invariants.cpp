#include "doctest.h"

#include "steenrod2/action.hpp"
#include "steenrod2/invariants.hpp"

using namespace st2;

namespace {

std::vector<long long> free_dims(std::vector<long long> degs, long long D) {
    std::vector<long long> out;
    for (auto v : free_algebra_dims(degs, D)) out.push_back(static_cast<long long>(v));
    return out;
}

}  // namespace

TEST_CASE("Dickson triple oracle") {
    auto gl2 = gl_matrices(2);
    auto fixed = invariant_ring_dims(gl2, 2, 15);
    auto sub = subalgebra_dims(form_algebra(2), dickson_generators(), 15);
    auto free23 = free_dims({2, 3}, 15);
    CHECK(fixed == free23);
    CHECK(sub == free23);
    CHECK(fixed == std::vector<long long>{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3});
}

TEST_CASE("fixed spaces of small groups") {
    LinMap id{2, 2, {1u, 2u}};
    CHECK(invariant_ring_dims({id}, 2, 4) == std::vector<long long>{1, 2, 3, 4, 5});

    LinMap swap{2, 2, {2u, 1u}};
    CHECK(invariant_ring_dims({swap}, 2, 5) == free_dims({1, 2}, 5));

    LinMap singular{2, 2, {1u, 1u}};
    CHECK_THROWS_AS(invariant_ring_dims({singular}, 2, 3), std::invalid_argument);
}

TEST_CASE("subalgebra closures") {
    auto a = form_algebra(2);
    auto fu = Algebra::make({{"u", 1}});
    CHECK(subalgebra_dims(fu, {parse_poly(fu, "u")}, 3) == std::vector<long long>{1, 1, 1, 1});

    // H_2 = F2 + w2 * F2[w1, w2]
    auto h2 = subalgebra_dims(a, h2_sw_generators(8), 8);
    auto inner = free_dims({1, 2}, 8);
    for (long long d = 0; d <= 8; ++d) {
        long long expected = d == 0 ? 1 : (d >= 2 ? inner[static_cast<std::size_t>(d - 2)] : 0);
        CHECK(h2[static_cast<std::size_t>(d)] == expected);
        // the Milnor-image generators span a subspace that nil-closes to H_2
        CHECK(subalgebra_dims(a, h2_generators(), 8)[static_cast<std::size_t>(d)] <= expected);
    }
    // w1^2 w2 is not a product of the Milnor generators, but its square is
    auto milnor8 = subalgebra_spans(a, h2_generators(), 8);
    Poly w12w2 = parse_poly(a, "u^3*v + u*v^3");
    CHECK_FALSE(milnor8[4].contains(DegreeBasis(a, 4).coords(w12w2)));
    CHECK(milnor8[8].contains(DegreeBasis(a, 8).coords(w12w2.square())));
    CHECK_THROWS_AS(subalgebra_dims(a, {parse_poly(a, "u + u^2")}, 4), std::invalid_argument);
}

TEST_CASE("H_2 generators are Milnor images of uv") {
    auto a = form_algebra(2);
    Poly uv = parse_poly(a, "u*v");
    auto gens = h2_generators(4);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0] == uv);
    CHECK(gens[1] == parse_poly(a, "u^2*v + u*v^2"));
    for (int k = 1; k <= 3; ++k) CHECK(gens[static_cast<std::size_t>(k)] == milnor_q(k - 1, uv));
}

TEST_CASE("the two descriptions of H_2 agree") {
    CHECK(h2_two_descriptions_check(2));
    CHECK(h2_two_descriptions_check(3));
    CHECK(h2_two_descriptions_check(12));
}

TEST_CASE("Dickson generators are fixed by every GL_2 element") {
    for (const Poly& d : dickson_generators())
        for (const LinMap& g : gl_matrices(2)) CHECK(linear_substitute(d, g) == d);
}

TEST_CASE("M_2 fiber product dimensions") {
    auto dims = m2_dims(12);
    auto a = form_algebra(2);
    auto d_dims = subalgebra_dims(a, dickson_generators(), 12);
    auto h_dims = subalgebra_dims(a, h2_sw_generators(12), 12);
    CHECK(dims[0] == 1);
    for (long long d = 0; d <= 12; ++d) {
        long long sum = d_dims[static_cast<std::size_t>(d)] + h_dims[static_cast<std::size_t>(d)];
        CHECK(dims[static_cast<std::size_t>(d)] <= sum);
        CHECK(dims[static_cast<std::size_t>(d)] >= sum - 1);
    }
    // degree 2: both restrictions hit u^2, so (d_{2,1}, w2) glues to one pair
    Poly d21 = dickson_generators()[0];
    Poly w2 = h2_generators()[0];
    std::map<int, Poly> diag{{1, Poly::var(Algebra::make({{"u", 1}}), 0)}};
    auto fu = Algebra::make({{"u", 1}});
    std::map<int, Poly> images{{0, Poly::var(fu, 0)}, {1, Poly::var(fu, 0)}};
    CHECK(substitute(d21, fu, images) == substitute(w2, fu, images));
    CHECK(substitute(d21, fu, images) == parse_poly(fu, "u^2"));
    CHECK(dims[2] == d_dims[2] + h_dims[2] - 1);
}

TEST_CASE("norm sequence of the Z/2 action") {
    auto reports = norm_sequence_check(12);
    REQUIRE(reports.size() == 13);
    for (const auto& r : reports) {
        CHECK(r.kernel_is_symmetric_algebra);
        CHECK(r.parity_ok);
        CHECK(r.quotient_dim == (r.degree % 2 == 0 ? 1 : 0));
    }
    CHECK(reports[0].quotient_dim == 1);
    CHECK(reports[1].quotient_dim == 0);
    CHECK(reports[2].quotient_dim == 1);
}

TEST_CASE("ext witness dims alternate") {
    auto dims = ext_witness_dims(9);
    for (long long d = 0; d <= 9; ++d) CHECK(dims[static_cast<std::size_t>(d)] == (d % 2 == 0 ? 0 : 1));
    CHECK(dims[3] == 1);
    CHECK(dims[4] == 0);
}
