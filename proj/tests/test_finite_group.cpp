#include "oracles.hpp"

#include "weylcheck/errors.hpp"
#include "weylcheck/finite_group.hpp"
#include "weylcheck/homomorphism.hpp"
#include "weylcheck/small_groups.hpp"
#include "weylcheck/weyl_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace weylcheck;

namespace {

FiniteGroup W(const char* t) { return weyl_group(CartanType::parse(t)); }

std::vector<std::size_t> orders(const std::vector<Subgroup>& list) {
    std::vector<std::size_t> out;
    for (auto& s : list) out.push_back(s.order());
    return out;
}

oracle::Set as_set(const Subgroup& s) {
    oracle::Set out(s.ambient().order(), false);
    for (Index i : s.elements()) out[i] = true;
    return out;
}

const std::vector<std::string> kSmallPool = {"Cyc1", "Cyc6", "Klein4", "Quat8", "Dih8", "Sym3", "Alt4",
                                             "Dih12", "Sym4", "Cyc12", "Dih24", "Alt5"};

} // namespace

TEST(Generate, SimpleReflectionsGiveExpectedOrders) {
    EXPECT_EQ(W("A2").order(), 6u);
    EXPECT_EQ(W("B3").order(), 48u);
    EXPECT_EQ(W("D4").order(), 192u);
    EXPECT_EQ(W("F4").order(), 1152u);
    EXPECT_EQ(W("E6").order(), 51840u);
}

TEST(Generate, BoundIsEnforced) {
    auto F4 = W("F4");
    std::vector<GroupElement> gens;
    for (Index g : F4.generators()) gens.push_back(F4.element(g));
    EXPECT_THROW(generate(gens, 1000), BoundExceeded);
    EXPECT_EQ(generate(gens, 1152).order(), 1152u);
}

TEST(Generate, AxiomsHold) {
    for (auto& name : kSmallPool) EXPECT_TRUE(verify_group_axioms(small_group(name))) << name;
    for (auto t : {"B3", "D4", "F4", "G2"}) EXPECT_TRUE(verify_group_axioms(W(t))) << t;
}

TEST(Exponent, Examples) {
    EXPECT_EQ(exponent(W("A2")), 6u);
    EXPECT_EQ(exponent(small_group("Cyc1")), 1u);
    EXPECT_EQ(exponent(W("G2")), 6u);
}

TEST(Exponent, MatchesPoweringOracleAndDividesOrder) {
    for (auto& name : kSmallPool) {
        auto G = small_group(name);
        EXPECT_EQ(exponent(G), oracle::exponent(oracle::table_of(G))) << name;
        EXPECT_EQ(G.order() % exponent(G), 0u) << name;
    }
    for (auto t : {"B3", "D4", "G2"}) {
        auto G = W(t);
        EXPECT_EQ(exponent(G), oracle::exponent(oracle::table_of(G))) << t;
    }
}

TEST(Classes, Examples) {
    auto s3 = small_group("Sym3").classes();
    ASSERT_EQ(s3.count(), 3u);
    auto sizes = s3.sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(W("B2").classes().count(), 5u);
    EXPECT_EQ(W("D4").classes().count(), 13u); // golden, rechecked below
}

TEST(Classes, CountsMatchNaiveConjugation) {
    for (auto G : {W("D4"), W("B3"), small_group("Sym4"), small_group("Quat8")}) {
        auto t = oracle::table_of(G);
        std::vector<bool> seen(t.n, false);
        std::size_t classes = 0;
        for (int a = 0; a < t.n; ++a) {
            if (seen[a]) continue;
            ++classes;
            for (int g = 0; g < t.n; ++g) seen[t(t(t.inv[g], a), g)] = true;
        }
        EXPECT_EQ(G.classes().count(), classes) << G.name();
    }
}

TEST(NormalClosure, Examples) {
    auto S4 = small_group("Sym4");
    Index three_cycle = 0;
    for (Index i = 0; i < S4.order(); ++i)
        if (S4.element_order(i) == 3) three_cycle = i;
    EXPECT_EQ(normal_closure(S4, std::vector<Index>{three_cycle}).order(), 12u);

    auto D4 = W("D4");
    std::vector<int> images = {0, 1, 2, 3}, negated = {0, 1, 2, 3};
    Index minus_id = D4.index_of(SignedPermutation(images, negated));
    auto delta = normal_closure(D4, std::vector<Index>{minus_id});
    EXPECT_EQ(delta.order(), 2u);

    EXPECT_TRUE(normal_closure(S4, std::vector<Index>{S4.identity()}).is_trivial());
}

TEST(NormalSubgroups, Examples) {
    EXPECT_EQ(orders(normal_subgroups(small_group("Sym4"))), (std::vector<std::size_t>{1, 4, 12, 24}));
    EXPECT_EQ(orders(normal_subgroups(small_group("Cyc2"))), (std::vector<std::size_t>{1, 2}));
}

TEST(NormalSubgroups, MatchOracleAsElementSets) {
    std::vector<FiniteGroup> groups;
    for (auto& name : kSmallPool) groups.push_back(small_group(name));
    groups.push_back(W("B3"));
    groups.push_back(W("D4"));
    for (auto& G : groups) {
        auto t = oracle::table_of(G);
        std::set<oracle::Set> expected;
        for (auto& s : oracle::all_normal_subgroups(t)) expected.insert(s);
        std::set<oracle::Set> got;
        for (auto& N : normal_subgroups(G)) {
            EXPECT_TRUE(oracle::is_normal(t, as_set(N)));
            got.insert(as_set(N));
        }
        EXPECT_EQ(got, expected) << G.name();
    }
}

TEST(NormalSubgroups, BoundedVariantIsAPrefix) {
    auto G = W("B4");
    auto all = normal_subgroups(G);
    auto small = normal_subgroups_up_to(G, 64);
    std::vector<std::size_t> expected;
    for (auto& N : all)
        if (N.order() <= 64) expected.push_back(N.order());
    EXPECT_EQ(orders(small), expected);
}

TEST(Quotient, SignChangesCutOutTheSymmetricGroup) {
    for (int n : {3, 4}) {
        CartanType b{'B', n};
        auto G = weyl_group(b);
        auto V = special_subgroups(b, G).at("V");
        auto Q = quotient(G, V);
        EXPECT_EQ(Q.order(), G.order() / V.order());
        EXPECT_TRUE(is_isomorphic(Q, weyl_group({'A', n - 1})).has_value()) << n;
    }
}

TEST(Quotient, WholeGroupGivesTrivial) {
    auto G = W("B3");
    EXPECT_EQ(quotient(G, G.whole()).order(), 1u);
}

TEST(Quotient, F4ModAIsS3xS3) {
    auto F4 = W("F4");
    auto A = special_subgroups(CartanType::parse("F4"), F4).at("A");
    auto Q = quotient(F4, A);
    ASSERT_EQ(Q.order(), 36u);
    auto S3 = small_group("Sym3");
    EXPECT_TRUE(is_isomorphic(Q, direct_product(S3, S3)).has_value());
}

TEST(Quotient, MatchesOracleTables) {
    auto G = W("D4");
    auto t = oracle::table_of(G);
    for (auto& N : normal_subgroups(G)) {
        auto Q = quotient(G, N);
        if (Q.order() > 48) continue;
        EXPECT_TRUE(oracle::isomorphic(oracle::table_of(Q), oracle::quotient(t, as_set(N)))) << N.order();
    }
}

TEST(Quotient, RejectsNonNormal) {
    auto S3 = small_group("Sym3");
    Index involution = 0;
    for (Index i = 0; i < S3.order(); ++i)
        if (S3.element_order(i) == 2) involution = i;
    EXPECT_THROW(quotient(S3, closure(S3, std::vector<Index>{involution})), NotNormal);
}

TEST(DerivedSeries, S4) {
    auto series = derived_series(small_group("Sym4"), 3);
    EXPECT_EQ(orders(series), (std::vector<std::size_t>{12, 4, 1}));
}

TEST(DerivedSeries, AbelianAndD4) {
    EXPECT_EQ(orders(derived_series(small_group("Cyc6"), 1)), (std::vector<std::size_t>{1}));
    auto series = derived_series(W("D4"), 3);
    ASSERT_EQ(series.size(), 3u);
    EXPECT_FALSE(series[2].is_trivial());
}

TEST(DerivedSeries, TermsAreNormalAndMatchCommutatorOracle) {
    for (auto G : {W("D4"), W("B3"), small_group("Sym4"), small_group("Dih24")}) {
        auto t = oracle::table_of(G);
        oracle::Set cur(t.n, true);
        for (auto& term : derived_series(G, 4)) {
            EXPECT_TRUE(is_normal(term));
            cur = oracle::commutator_subgroup(t, cur);
            EXPECT_EQ(as_set(term), cur) << G.name();
        }
    }
}

TEST(Subgroups, IntersectAndJoin) {
    auto G = W("B4");
    auto sp = special_subgroups(CartanType::parse("B4"), G);
    EXPECT_EQ(intersect(sp.at("Delta"), sp.at("Ve")).order(), 2u);
    EXPECT_EQ(join(sp.at("Delta"), sp.at("Ve")).order(), 8u);
    EXPECT_TRUE(sp.at("Ve").is_subset_of(sp.at("V")));
}

TEST(Subgroups, CenterAndCentralizer) {
    EXPECT_EQ(center(W("F4")).order(), 2u);
    EXPECT_EQ(center(small_group("Sym3")).order(), 1u);
    auto G = small_group("Dih8");
    for (Index x = 0; x < G.order(); ++x) EXPECT_EQ(G.order() % centralizer(G, x).order(), 0u);
}

TEST(DirectProduct, CoordinatesRoundTrip) {
    auto A = small_group("Sym3"), B = small_group("Cyc4");
    auto P = direct_product(A, B);
    ASSERT_TRUE(is_product_group(P));
    EXPECT_EQ(P.order(), 24u);
    for (Index x = 0; x < P.order(); ++x) {
        auto [a, b] = product_coordinates(P, x);
        EXPECT_EQ(product_index(P, a, b), x);
    }
    auto [fa, fb] = product_factors(P);
    EXPECT_EQ(fa.order(), 6u);
    EXPECT_EQ(fb.order(), 4u);
}

TEST(DirectProduct, SubsetIsClosed) {
    auto A = small_group("Cyc2");
    Index e = A.identity(), g = e == 0 ? 1 : 0;
    auto diag = product_subset(A, A, {{e, e}, {g, g}});
    EXPECT_EQ(diag.order(), 2u);
    EXPECT_TRUE(verify_group_axioms(diag));
}
