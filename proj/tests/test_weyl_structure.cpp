#include "oracles.hpp"

#include "weylcheck/errors.hpp"
#include "weylcheck/weyl_structure.hpp"

#include <gtest/gtest.h>

using namespace weylcheck;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

} // namespace

TEST(ExponentOrthogonal, Examples) {
    auto v4 = verify_exponent_orthogonal(4);
    EXPECT_TRUE(v4.holds);
    EXPECT_EQ(v4.witness["e_S"], 12);
    EXPECT_EQ(v4.witness["e_D"], 12);
    EXPECT_EQ(v4.witness["e_B"], 24);

    auto v3 = verify_exponent_orthogonal(3);
    EXPECT_TRUE(v3.holds);
    EXPECT_EQ(v3.witness["e_B"], 12);
    EXPECT_EQ(v3.witness["e_D"], 12);

    auto v6 = verify_exponent_orthogonal(6);
    EXPECT_TRUE(v6.holds);
    EXPECT_EQ(v6.witness["e_S"], 60);
    EXPECT_EQ(v6.witness["e_D"], 120);
}

TEST(ExponentOrthogonal, ReplayedElementsHaveTheClaimedOrders) {
    for (int n = 3; n <= 7; ++n) {
        auto v = verify_exponent_orthogonal(n);
        EXPECT_TRUE(v.holds) << n;
        for (auto& e : v.witness["elements"]) EXPECT_EQ(e["order"], e["expected"]) << n << " " << e.dump();
    }
}

TEST(ExponentOrthogonal, ClosedFormMatchesDirectExponent) {
    for (int n = 3; n <= 6; ++n) {
        auto v = verify_exponent_orthogonal(n);
        EXPECT_EQ(v.witness["e_B"], exponent(weyl_group({'B', n})));
        EXPECT_EQ(v.witness["e_D"], exponent(weyl_group({'D', n})));
        EXPECT_EQ(v.witness["e_S"], exponent(weyl_group({'A', n - 1})));
    }
}

TEST(InvariantSubspaces, Examples) {
    auto v = verify_invariant_subspaces(5, PermAction::Alternating);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.witness["count"], 2);
    EXPECT_TRUE(verify_invariant_subspaces(4, PermAction::Symmetric).holds);
}

TEST(InvariantSubspaces, KleinIsReportedFromBruteForce) {
    auto v = verify_invariant_subspaces(4, PermAction::Klein);
    // K4 acts regularly on 4 points: F_2[K4] has more invariant subspaces than Delta and Ve
    EXPECT_FALSE(v.holds);
    EXPECT_GT(v.witness["count"].get<int>(), 2);
    EXPECT_FALSE(v.witness["unexpected"].empty());
}

TEST(InvariantSubspaces, StrategiesAgree) {
    for (int n = 3; n <= 6; ++n)
        for (auto h : {PermAction::Alternating, PermAction::Symmetric}) {
            auto gens = action_generators(n, h);
            EXPECT_EQ(invariant_subspaces_exhaustive(n, gens), invariant_subspaces_by_orbits(n, gens)) << n;
        }
    auto k4 = action_generators(4, PermAction::Klein);
    EXPECT_EQ(invariant_subspaces_exhaustive(4, k4), invariant_subspaces_by_orbits(4, k4));
}

TEST(InvariantSubspaces, ExhaustiveListIsStable) {
    // every listed subspace is closed under the generators and under addition
    int n = 5;
    auto gens = action_generators(n, PermAction::Symmetric);
    for (auto& s : invariant_subspaces_exhaustive(n, gens)) {
        std::set<unsigned> span{0};
        for (auto b : s) {
            std::set<unsigned> more = span;
            for (auto x : span) more.insert(x ^ b);
            span = more;
        }
        for (auto x : span)
            for (auto& g : gens) {
                unsigned y = 0;
                for (int i = 0; i < n; ++i)
                    if (x >> i & 1U) y |= 1U << g[i];
                EXPECT_TRUE(span.count(y));
            }
    }
}

TEST(NormalSubgroupsD, OddRanksMatch) {
    auto v3 = verify_normal_subgroups_D(3);
    EXPECT_TRUE(v3.holds) << v3.witness.dump();
    auto v5 = verify_normal_subgroups_D(5);
    EXPECT_TRUE(v5.holds) << v5.witness.dump();
    std::vector<int> orders;
    for (auto& e : v5.witness["proper_nontrivial"]) orders.push_back(e["order"]);
    EXPECT_EQ(orders, (std::vector<int>{16, 960}));
}

TEST(NormalSubgroupsD, RankFourFollowsBruteForce) {
    // brute force is the authority here; the two extra subgroups of order 8 are triality images of Ve
    auto t = oracle::table_of(weyl_group({'D', 4}));
    auto all = oracle::all_normal_subgroups(t);
    std::vector<std::size_t> orders;
    for (auto& s : all) orders.push_back(oracle::count(s));
    std::sort(orders.begin(), orders.end());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 8, 8, 8, 32, 96, 192}));

    auto v = verify_normal_subgroups_D(4);
    EXPECT_EQ(v.witness["count"], 6);
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(v.witness["missing"].empty());
}

TEST(ProductDecomposition, Examples) {
    for (int n : {3, 5}) {
        auto v = verify_product_decomposition(n);
        EXPECT_TRUE(v.holds) << n;
        EXPECT_EQ(v.witness["mode"], "internal direct product");
        EXPECT_EQ(v.witness["intersection_order"], 1);
    }
    auto v4 = verify_product_decomposition(4);
    EXPECT_TRUE(v4.holds);
    EXPECT_TRUE(v4.witness["splittings"].empty());
}

TEST(Isotrivial, Examples) {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"B4", "C4"}, {"G2", "A2"}, {"B5", "D5"}, {"B3", "A3"}}) {
        auto v = verify_isotrivial_pair(T(a), T(b));
        EXPECT_TRUE(v.holds) << a << b;
        EXPECT_EQ(v.witness["isotrivial"], true) << a << b;
    }
    auto v = verify_isotrivial_pair(T("B4"), T("D4"));
    EXPECT_EQ(v.witness["isotrivial"], false);
}

TEST(F4Structure, AllChecksPass) {
    auto v = verify_f4_structure();
    EXPECT_TRUE(v.holds);
    ASSERT_EQ(v.witness["checks"].size(), 8u);
    for (auto& c : v.witness["checks"]) EXPECT_TRUE(c["holds"].get<bool>()) << c.dump();
}

TEST(JhType, Examples) {
    auto d6 = jh_type(T("D6"));
    EXPECT_EQ(d6.tag.kind, JhKind::Alternating);
    EXPECT_EQ(d6.tag.degree, 6);
    EXPECT_EQ(jh_type(T("F4")).tag.kind, JhKind::Z3);
    EXPECT_EQ(jh_type(T("A1")).tag.kind, JhKind::Z2);
    EXPECT_EQ(jh_type(T("E8")).tag.kind, JhKind::E);
    EXPECT_FALSE(jh_type(T("E8")).computed);
}

TEST(JhType, ComputedMatchesTable) {
    for (auto t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C4", "D4", "D5", "G2", "F4", "E6"}) {
        auto r = jh_type(T(t));
        EXPECT_TRUE(r.computed) << t;
        EXPECT_TRUE(r.matches_table) << t;
        EXPECT_TRUE(verify_jh_type(T(t)).holds) << t;
    }
}

TEST(Verdict, JsonRoundTrip) {
    auto v = verify_product_decomposition(3);
    Json j = v;
    EXPECT_EQ(j.at("claim_id"), v.claim_id);
    for (auto key : {"claim_id", "params", "holds", "witness", "elapsed_ms"}) EXPECT_TRUE(j.contains(key)) << key;
    Verdict back = j.get<Verdict>();
    EXPECT_EQ(Json(back), j);
}
