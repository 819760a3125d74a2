#include "verlinde/bigint.hpp"
#include "verlinde/labels.hpp"
#include "verlinde/root_datum.hpp"
#include "verlinde/series.hpp"

#include <doctest.h>

using namespace verlinde;

TEST_CASE("binomial series coefficients") {
    const ModPSeries s = binomial_series(5, +1, 3);
    for (std::int64_t d = 0; d <= 6; ++d)
        CHECK(s.coefficient(static_cast<std::size_t>(d)) == mod_p(binomial(5, d), 3));

    const ModPSeries m = binomial_series(6, -1, 5);
    for (std::int64_t d = 0; d <= 6; ++d) {
        const Int signed_coeff = (d % 2 ? -1 : 1) * binomial(6, d);
        CHECK(m.coefficient(static_cast<std::size_t>(d)) == mod_p(signed_coeff, 5));
    }

    // (1+t)^p = 1 + t^p mod p
    const ModPSeries frob = binomial_series(7, +1, 7);
    CHECK(frob.coefficient(0) == 1);
    CHECK(frob.coefficient(7) == 1);
    for (std::size_t d = 1; d < 7; ++d) CHECK(frob.coefficient(d) == 0);
}

TEST_CASE("triple of power series for an (m, n) profile") {
    const PowerSeriesTriple t = power_series(6, 3, 3);
    CHECK(t.product.coeffs == binomial_series(9, +1, 3).coeffs);
    CHECK(t.sym.coeffs == binomial_series(6, -1, 3).coeffs);
    CHECK(t.ext.coeffs == binomial_series(3, +1, 3).coeffs);
}

TEST_CASE("digit-wise binomials agree with exact reduction") {
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
        for (std::int64_t n = 0; n <= 120; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                CHECK(binomial_mod_p_lucas(n, k, p) == mod_p(binomial(n, k), p));
    }
}

TEST_CASE("vanishing range of (1+t)^(m+n) detects the p-adic valuation") {
    // p^(r+1) | m+n  <=>  all coefficients t^d, 0 < d <= p^r, vanish
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t s = 0; s <= 200; ++s)
            for (std::int64_t r = 0; r <= 2; ++r) {
                CAPTURE(p);
                CAPTURE(s);
                CAPTURE(r);
                CHECK(divisibility_check(s, 0, p, r) == arithmetic_divisibility(s, 0, p, r));
            }
    }
    CHECK(divisibility_check(6, 3, 3, 1));       // 9 | 9
    CHECK_FALSE(divisibility_check(6, 3, 3, 2)); // 27 does not divide 9
    CHECK(divisibility_check(6, 2, 2, 2));       // 8 | 8
    CHECK_FALSE(divisibility_check(6, 2, 2, 3)); // 16 does not divide 8
}

TEST_CASE("measured dimension profiles all sit one rung up the ladder") {
    const auto& rows = dimension_profiles();
    CHECK(rows.size() == 8);
    for (const DimensionProfile& row : rows) {
        CAPTURE(row.category);
        CAPTURE(row.object);
        CHECK((row.m + row.n) % (row.p * row.p) == 0);
        CHECK(divisibility_check(row.m, row.n, row.p, 1));
    }
}

TEST_CASE("series pretty printer") {
    ModPSeries s;
    s.p = 5;
    s.coeffs = {1, 0, 3, 1};
    CHECK(s.to_string() == "1 + 3t^2 + t^3");
    s.coeffs = {0};
    s.trim();
    CHECK(s.coeffs.empty());
    CHECK(s.to_string() == "0");
}

TEST_CASE("paper-to-bourbaki node permutations") {
    const RootDatum e6 = RootDatum::build('E', 6);
    CHECK(to_bourbaki_index(e6, 1) == 6);
    CHECK(to_bourbaki_index(e6, 6) == 2);
    const RootDatum e7 = RootDatum::build('E', 7);
    CHECK(to_bourbaki_index(e7, 1) == 7);
    const RootDatum e8 = RootDatum::build('E', 8);
    CHECK(to_bourbaki_index(e8, 1) == 8);
    const RootDatum f4 = RootDatum::build('F', 4);
    CHECK(to_bourbaki_index(f4, 1) == 4);
    CHECK(to_bourbaki_index(f4, 4) == 1);
    const RootDatum g2 = RootDatum::build('G', 2);
    CHECK(to_bourbaki_index(g2, 1) == 1); // identity off E/F

    // the permuted natural reps: 27 for E6, 56 for E7, 26 for F4
    CHECK(e6.weyl_dimension(to_bourbaki(e6, {1, 0, 0, 0, 0, 0}, LabelConvention::paper)) == 27);
    CHECK(e7.weyl_dimension(to_bourbaki(e7, {1, 0, 0, 0, 0, 0, 0}, LabelConvention::paper)) == 56);
    CHECK(f4.weyl_dimension(to_bourbaki(f4, {1, 0, 0, 0}, LabelConvention::paper)) == 26);

    for (const auto& [type, rank] : std::vector<std::pair<char, int>>{
             {'A', 4}, {'B', 3}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}}) {
        const RootDatum d = RootDatum::build(type, rank);
        // from_bourbaki inverts to_bourbaki nodewise
        for (int i = 1; i <= d.rank(); ++i) {
            CHECK(from_bourbaki_index(d, to_bourbaki_index(d, i)) == i);
            const Weight w = d.fundamental_weight(i);
            CHECK(from_bourbaki(d, to_bourbaki(d, w, LabelConvention::paper),
                                LabelConvention::paper) == w);
        }
        // bourbaki convention is a no-op
        const Weight probe = d.rho();
        CHECK(to_bourbaki(d, probe, LabelConvention::bourbaki) == probe);
    }
}

TEST_CASE("weight parsing") {
    const RootDatum f4 = RootDatum::build('F', 4);
    CHECK(parse_weight(f4, "w1", LabelConvention::bourbaki) == Weight{1, 0, 0, 0});
    CHECK(parse_weight(f4, "w1", LabelConvention::paper) == Weight{0, 0, 0, 1});
    CHECK(parse_weight(f4, "3w2+w4", LabelConvention::bourbaki) == Weight{0, 3, 0, 1});
    CHECK(parse_weight(f4, "2*w1+2*w1", LabelConvention::bourbaki) == Weight{4, 0, 0, 0});
    CHECK(parse_weight(f4, "adjoint", LabelConvention::paper) == f4.highest_root().weight);
    CHECK(parse_weight(f4, "0", LabelConvention::bourbaki) == f4.zero_weight());

    CHECK_THROWS_AS(parse_weight(f4, "w0", LabelConvention::bourbaki), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(f4, "w5", LabelConvention::bourbaki), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(f4, "3", LabelConvention::bourbaki), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(f4, "w1-w2", LabelConvention::bourbaki), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(f4, "w1+", LabelConvention::bourbaki), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight(f4, "", LabelConvention::bourbaki), std::invalid_argument);
}

TEST_CASE("weight printing") {
    CHECK(weight_to_string({0, 3, 0, 1}) == "3w2+w4");
    CHECK(weight_to_string({0, 0}) == "0");
    CHECK(weight_to_string({1, 1}) == "w1+w2");
}
