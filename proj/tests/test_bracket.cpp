#include "verlinde/bracket.hpp"

#include <doctest.h>

using namespace verlinde;

TEST_CASE("grid identities for the bracket polynomials all hold") {
    const auto checks = verify_p_identities();
    CHECK(checks.size() >= 5);
    for (const IdentityCheck& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
        CHECK(c.samples > 0);
    }
}

TEST_CASE("P at the fusion edge is the constant -2k") {
    for (long long n = 6; n <= 14; ++n)
        for (long long k = 1; k <= 4; ++k)
            for (long long i = k + 1; i + k <= n - 1; ++i) {
                CAPTURE(n);
                CAPTURE(i);
                CAPTURE(k);
                CHECK(p_poly(n, i, i - k + 1, k) == Rat(-2 * k));
            }
}

TEST_CASE("fusion support and parity gate the bracket") {
    const long long n = 7, p = 17;
    // k outside |i-j|..i+j can never appear
    CHECK_FALSE(fusion_allows(2, 3, 6, p));
    CHECK(fusion_allows(2, 3, 5, p));
    // i+j+k even components vanish by antisymmetry
    CHECK_FALSE(bracket_nonzero(n, 2, 2, 2, p));
    // the adjoint copy inside Lambda^2: [L2, L2] -> L2
    CHECK(bracket_nonzero(n, 1, 1, 1, p));
    // s_value requires the fusion condition
    CHECK_THROWS(s_value(n, 1, 1, 5, p));
}

TEST_CASE("six-j cross check agrees with the bracket sums where conclusive") {
    int conclusive = 0;
    for (const auto& [i, j, k] : SubalgebraContext(7, 17).sorted_triples()) {
        const auto verdict = six_j_agrees(7, i, j, k, 17);
        if (verdict.has_value()) {
            ++conclusive;
            CHECK(*verdict);
        }
    }
    CHECK(conclusive > 0);
}

TEST_CASE("subalgebra lattice at the documented sample cell") {
    SubalgebraContext ctx(7, 17);
    const std::vector<Mask> expected = {
        mask_from_indices({1}),
        mask_from_indices({1, 5}),
        mask_from_indices({1, 3, 5}),
        mask_from_indices({1, 2, 3, 4, 5, 6}),
    };
    CHECK(ctx.enumerate() == expected);
    CHECK(ctx.enumerate_exhaustive() == expected);
    CHECK(expected_family_masks(7, 17) == expected);

    for (Mask m : expected) {
        CHECK(ctx.is_closed(m));
        CHECK(ctx.closure(m) == m);
    }
    // adding the quadratic generator forces everything
    CHECK(ctx.closure(mask_from_indices({1, 2})) == ctx.full_mask());

    CHECK(classify_mask(mask_from_indices({1}), 7, 17) == std::vector<char>{'c'});
    CHECK(classify_mask(mask_from_indices({1, 5}), 7, 17) == std::vector<char>{'d'});
    CHECK(classify_mask(mask_from_indices({1, 3, 5}), 7, 17) == std::vector<char>{'b'});
    CHECK(classify_mask(ctx.full_mask(), 7, 17) == std::vector<char>{'a'});
    CHECK(classify_mask(mask_from_indices({1, 4}), 7, 17).empty());
}

TEST_CASE("large n reduces through sl(L_{n-1}) = sl(L_{p-n-1})") {
    SubalgebraContext ctx(15, 17);
    CHECK(ctx.requested_n() == 15);
    CHECK(ctx.n() == 2);
    CHECK_THROWS_AS(SubalgebraContext(16, 17), std::invalid_argument); // n' = 1
    CHECK_THROWS_AS(SubalgebraContext(1, 7), std::invalid_argument);
}

TEST_CASE("mask helpers") {
    const Mask m = mask_from_indices({1, 3, 5});
    CHECK(mask_indices(m) == std::vector<int>{1, 3, 5});
    CHECK(mask_to_string(m) == "{1,3,5}");
    CHECK(mask_to_string(0) == "{}");
}

TEST_CASE("every closed set survives the exhaustive oracle on a prime sample") {
    for (const auto& [n, p] : std::vector<std::pair<int, long long>>{
             {2, 5}, {3, 7}, {5, 11}, {6, 13}, {8, 17}, {10, 23}, {11, 23}, {14, 29}}) {
        SubalgebraContext ctx(n, p);
        CAPTURE(n);
        CAPTURE(p);
        CHECK(ctx.enumerate() == ctx.enumerate_exhaustive());
        CHECK(ctx.enumerate() == expected_family_masks(n, p));
    }
}
