#include <doctest.h>

#include <random>

#include "core/invariants.hpp"

using namespace itkc;

namespace {

IteratedTorusKnot knot_c(std::vector<CablingPair> pairs) {
    return IteratedTorusKnot::validate(pairs, Frame::C);
}

IteratedTorusKnot random_cabling_knot(std::mt19937_64& rng, int r_max, int q_max,
                                      int p_max, bool positive) {
    std::uniform_int_distribution<int> r_dist(1, r_max);
    std::uniform_int_distribution<long> q_dist(2, q_max);
    std::uniform_int_distribution<long> p_dist(positive ? 1 : -p_max, p_max);
    int r = r_dist(rng);
    std::vector<CablingPair> raw;
    for (int i = 0; i < r; ++i) {
        Int q = q_dist(rng);
        for (;;) {
            long p = p_dist(rng);
            if (p == 0 || (i == 0 && std::abs(p) < 2))
                continue;
            if (gcd_int(p, q) != 1)
                continue;
            raw.push_back({p, q});
            break;
        }
    }
    return IteratedTorusKnot::validate(raw, positive ? Frame::C : Frame::Cprime);
}

} // namespace

TEST_CASE("product invariants on the sample knots") {
    auto ab1 = compute_ab_recursive(knot_c({{2, 3}}));
    CHECK(ab1 == std::vector<ABPair>{{6, 5}});

    auto ab2 = compute_ab_recursive(knot_c({{2, 3}, {7, 2}}));
    CHECK(ab2 == std::vector<ABPair>{{6, 5}, {14, 5}});

    auto ab3 = compute_ab_recursive(knot_c({{3, 4}, {5, 2}}));
    CHECK(ab3 == std::vector<ABPair>{{12, 7}, {10, -5}});

    CHECK(compute_ab_closed(knot_c({{2, 3}, {7, 2}})) == ab2);
    CHECK(compute_ab_closed(knot_c({{3, 4}, {5, 2}})) == ab3);
}

TEST_CASE("closed form equals recursion and the four shear identities hold") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 2000; ++i) {
        auto k = random_cabling_knot(rng, 6, 6, 15, false);
        auto closed = compute_ab_closed(k);
        auto recursive = compute_ab_recursive(k);
        REQUIRE(closed == recursive);

        auto ps = k.cabling_firsts();
        auto big_ps = k.preferred_firsts();
        const auto& qs = k.qs();
        Int a_prev = 0, b_prev = 1;
        for (std::size_t j = 0; j < k.length(); ++j) {
            CHECK(recursive[j].A == qs[j] * qs[j] * a_prev + ps[j] * qs[j]);
            CHECK(recursive[j].B == qs[j] * b_prev + ps[j]);
            CHECK(big_ps[j] == qs[j] * a_prev + ps[j]);
            CHECK(recursive[j].A == big_ps[j] * qs[j]);
            a_prev = recursive[j].A;
            b_prev = recursive[j].B;
        }
    }
}

TEST_CASE("euler characteristic and genus") {
    CHECK(euler_characteristic(knot_c({{2, 3}})) == -1);
    CHECK(euler_characteristic(knot_c({{2, 3}, {7, 2}})) == -9);
    CHECK(euler_characteristic(knot_c({{3, 4}, {5, 2}})) == -15);
    CHECK(genus(knot_c({{2, 3}})) == 1);
    CHECK(genus(knot_c({{3, 4}})) == 3);
    CHECK(genus(knot_c({{2, 3}, {7, 2}})) == 5);
    CHECK_THROWS_AS(euler_characteristic(knot_c({{-2, 3}})), UnsupportedRegime);
    CHECK_THROWS_AS(euler_characteristic(knot_c({{2, 3}, {-7, 2}})), UnsupportedRegime);
    CHECK_THROWS_AS(genus(knot_c({{-2, 3}})), UnsupportedRegime);
}

TEST_CASE("all-positive knots have A > B on every prefix and -chi = A - B") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
        auto k = random_cabling_knot(rng, 5, 6, 12, true);
        auto ab = compute_ab_recursive(k);
        auto chis = euler_characteristic_table(k);
        for (std::size_t j = 0; j < k.length(); ++j) {
            CHECK(ab[j].A > ab[j].B);
            CHECK(-chis[j] == ab[j].A - ab[j].B);
            CHECK((ab[j].A - ab[j].B) % 2 == 1);  // genus integrality
        }
    }
}

TEST_CASE("UTP classification") {
    CHECK(fails_utp(knot_c({{2, 3}, {7, 2}})));
    CHECK(fails_utp(knot_c({{2, 3}, {11, 2}})));
    CHECK(fails_utp(IteratedTorusKnot::validate({{2, 3}, {-1, 2}}, Frame::Cprime)));
    CHECK_FALSE(fails_utp(knot_c({{-2, 3}})));
    CHECK_FALSE(fails_utp(knot_c({{2, 3}, {-7, 2}})));

    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
        auto k = random_cabling_knot(rng, 5, 6, 12, false);
        CHECK(fails_utp(k) == supports_standard_structure(k));
        bool expected = true;
        for (const auto& p : k.preferred_firsts())
            expected = expected && p > 0;
        CHECK(fails_utp(k) == expected);
    }
}

TEST_CASE("width recursion on the sample knots") {
    auto base = width_tb_recursion(knot_c({{2, 3}}));
    REQUIRE(base.size() == 1);
    CHECK(base[0] == WidthRow{1, 1, -5, WidthCase::Base});

    auto case_one = width_tb_recursion(knot_c({{2, 3}, {7, 2}}));
    CHECK(case_one[1] == WidthRow{9, 9, -5, WidthCase::CaseI});

    auto case_two = width_tb_recursion(knot_c({{3, 4}, {5, 2}}));
    CHECK(case_two[0] == WidthRow{5, 5, -7, WidthCase::Base});
    CHECK(case_two[1] == WidthRow{10, 10, 0, WidthCase::CaseII});

    CHECK_THROWS_AS(width_tb_recursion(knot_c({{2, 3}, {-7, 2}})), UnsupportedRegime);
}

TEST_CASE("width recursion bounds and the A - B specialization") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 500; ++i) {
        auto k = random_cabling_knot(rng, 5, 6, 12, true);
        auto rows = width_tb_recursion(k);
        auto ab = compute_ab_recursive(k);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            CHECK(rows[j].tbbar == rows[j].width);
            CHECK(rows[j].tbbar > 0);
            CHECK(rows[j].tbbar <= ab[j].A);
            CHECK(rows[j].tbar > -ab[j].A);
            CHECK(rows[j].tbar <= 0);
            CHECK(rows[j].tbar == rows[j].tbbar - ab[j].A);
            // whenever the previous width sits at A - B, a Case I step
            // lands on A - B again
            if (j >= 1 && rows[j].kase == WidthCase::CaseI &&
                rows[j - 1].width == ab[j - 1].A - ab[j - 1].B)
                CHECK(rows[j].width == ab[j].A - ab[j].B);
        }
    }
}

TEST_CASE("maximal self-linking number") {
    CHECK(max_self_linking(knot_c({{2, 3}})) == 1);
    CHECK(max_self_linking(knot_c({{2, 3}, {7, 2}})) == 9);
    // exceeds tbbar = 10 here: the Case II gap between tbbar and -chi
    CHECK(max_self_linking(knot_c({{3, 4}, {5, 2}})) == 15);
    CHECK_THROWS_AS(max_self_linking(knot_c({{-2, 3}})), UnsupportedRegime);
}

TEST_CASE("invariant table rows") {
    auto table = invariant_table(knot_c({{2, 3}, {7, 2}}));
    REQUIRE(table.rows.size() == 2);
    CHECK(table.positive_regime);
    CHECK(table.rows[0].A == 6);
    CHECK(table.rows[0].p == 2);
    CHECK(table.rows[1].p == -5);
    CHECK(table.rows[1].chi == Int(-9));
    CHECK(table.rows[1].genus == Int(5));
    CHECK(table.rows[1].tbbar == Int(9));
    CHECK(table.rows[1].kase == WidthCase::CaseI);
    CHECK_FALSE(table.rows[1].C.has_value());  // filled by the catalog layer

    auto mixed = invariant_table(knot_c({{2, 3}, {-7, 2}}));
    CHECK_FALSE(mixed.positive_regime);
    CHECK(mixed.rows[1].A == -14);
    CHECK_FALSE(mixed.rows[1].chi.has_value());
    CHECK_FALSE(mixed.rows[1].tbbar.has_value());
}
