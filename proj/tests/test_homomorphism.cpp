#include "oracles.hpp"

#include "weylcheck/composition.hpp"
#include "weylcheck/errors.hpp"
#include "weylcheck/homomorphism.hpp"
#include "weylcheck/small_groups.hpp"
#include "weylcheck/weyl_group.hpp"

#include <gtest/gtest.h>

using namespace weylcheck;

namespace {

FiniteGroup W(const char* t) { return weyl_group(CartanType::parse(t)); }

std::vector<std::string> names(const std::vector<SimpleFactorId>& fs) {
    std::vector<std::string> out;
    for (auto& f : fs) out.push_back(f.name());
    return out;
}

std::uint64_t product_of_orders(const std::vector<SimpleFactorId>& fs) {
    std::uint64_t p = 1;
    for (auto& f : fs) p *= f.order;
    return p;
}

} // namespace

TEST(Surjection, Examples) {
    auto S4 = small_group("Sym4");
    auto s = surjection_exists(S4, small_group("Cyc2"));
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->is_surjective());
    EXPECT_EQ(s->kernel().order(), 12u);
    EXPECT_FALSE(surjection_exists(S4, small_group("Klein4")));
    auto A1 = W("A1");
    EXPECT_TRUE(surjection_exists(W("B2"), direct_product(A1, A1)));
}

TEST(Surjection, AgreesWithQuotientOracle) {
    const std::vector<std::string> sources = {"Sym4", "Dih24", "Alt4", "Quat8", "Dih12", "Alt5", "Cyc12"};
    const std::vector<std::string> targets = {"Cyc2", "Cyc3", "Cyc4", "Klein4", "Sym3", "Dih8", "Quat8", "Cyc6", "Alt4"};
    for (auto& g : sources) {
        auto G = small_group(g);
        auto tg = oracle::table_of(G);
        for (auto& h : targets) {
            auto H = small_group(h);
            bool expected = oracle::has_quotient(tg, oracle::table_of(H));
            auto phi = surjection_exists(G, H);
            EXPECT_EQ(phi.has_value(), expected) << g << " -> " << h;
            if (phi) EXPECT_TRUE(phi->is_surjective() && phi->check_all_pairs());
            EXPECT_EQ(surjection_by_kernels(G, H).has_value(), expected) << g << " -> " << h;
        }
    }
}

TEST(Surjection, KernelsAndBacktrackingAgreeOnWeylGroups) {
    for (auto [g, h] : std::vector<std::pair<const char*, const char*>>{
             {"B3", "A2"}, {"B3", "A3"}, {"D4", "A2"}, {"D4", "A3"}, {"B4", "A3"}, {"B4", "B2"}, {"F4", "G2"}, {"F4", "B3"}}) {
        auto G = W(g), H = W(h);
        EXPECT_EQ(surjection_exists(G, H).has_value(), surjection_by_kernels(G, H).has_value()) << g << " -> " << h;
    }
}

TEST(Surjection, BudgetIsReported) {
    SearchOptions tight;
    tight.node_budget = 1;
    EXPECT_THROW(surjection_exists(W("F4"), W("B3"), tight), SearchBudgetExceeded);
}

TEST(Isomorphism, Examples) {
    auto Z2 = small_group("Cyc2");
    auto iso = is_isomorphic(W("B3"), direct_product(small_group("Sym4"), Z2));
    ASSERT_TRUE(iso);
    EXPECT_TRUE(iso->is_bijective());
    EXPECT_TRUE(is_isomorphic(W("G2"), small_group("Dih12")));
    EXPECT_FALSE(is_isomorphic(W("B4"), direct_product(W("D4"), Z2)));
}

TEST(Isomorphism, AutomorphismCounts) {
    // |Aut(S3)| = 6, |Aut(Z/2 x Z/2)| = 6, |Aut(Q8)| = 24
    EXPECT_EQ(all_isomorphisms(small_group("Sym3"), small_group("Sym3")).size(), 6u);
    EXPECT_EQ(all_isomorphisms(small_group("Klein4"), small_group("Klein4")).size(), 6u);
    EXPECT_EQ(all_isomorphisms(small_group("Quat8"), small_group("Quat8")).size(), 24u);
}

TEST(Isomorphism, AgreesWithOracle) {
    const std::vector<std::string> pool = {"Dih8", "Quat8", "Cyc8", "Dih12", "Alt4", "Cyc12", "Sym3", "Cyc6"};
    for (auto& a : pool)
        for (auto& b : pool) {
            auto A = small_group(a), B = small_group(b);
            EXPECT_EQ(is_isomorphic(A, B).has_value(), oracle::isomorphic(oracle::table_of(A), oracle::table_of(B)))
                << a << " vs " << b;
        }
}

TEST(Homomorphism, ExtendRejectsNonHomomorphisms) {
    auto S3 = small_group("Sym3");
    auto Z3 = small_group("Cyc3");
    Index gen3 = 0;
    for (Index i = 0; i < Z3.order(); ++i)
        if (Z3.element_order(i) == 3) gen3 = i;
    std::vector<Index> images(S3.generators().size(), gen3);
    // S3 has no map onto Z/3, and sending every generator to the same 3-element fails
    EXPECT_FALSE(Homomorphism::extend(S3, Z3, images));
    std::vector<Index> trivial(S3.generators().size(), Z3.identity());
    auto h = Homomorphism::extend(S3, Z3, trivial);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->kernel().order(), 6u);
    EXPECT_TRUE(h->check_all_pairs());
}

TEST(Homomorphism, ComposeProjections) {
    auto A = small_group("Sym4"), S3 = small_group("Sym3");
    auto to_s3 = surjection_exists(A, S3);
    ASSERT_TRUE(to_s3);
    auto to_z2 = surjection_exists(S3, small_group("Cyc2"));
    ASSERT_TRUE(to_z2);
    auto c = compose(*to_s3, *to_z2);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->kernel().order(), 12u);
}

TEST(Composition, Examples) {
    EXPECT_EQ(names(jh_set(composition_factors(W("B5")))), (std::vector<std::string>{"Z/2", "A5"}));
    auto e6 = jh_set(composition_factors(W("E6")));
    ASSERT_EQ(e6.size(), 2u);
    EXPECT_EQ(e6[0].order, 2u);
    EXPECT_EQ(e6[1].order, 25920u);
    EXPECT_FALSE(e6[1].abelian);
    EXPECT_EQ(names(composition_factors(small_group("Cyc6"))), (std::vector<std::string>{"Z/2", "Z/3"}));
}

TEST(Composition, FactorsMultiplyToOrderAndIgnoreTieBreak) {
    std::vector<FiniteGroup> groups;
    for (auto& n : small_group_names())
        if (small_group(n).order() <= 2520) groups.push_back(small_group(n));
    for (auto t : {"B3", "D4", "B4", "F4", "G2"}) groups.push_back(W(t));
    for (auto& G : groups) {
        auto first = composition_factors(G, TieBreak::First);
        auto last = composition_factors(G, TieBreak::Last);
        EXPECT_EQ(first, last) << G.name();
        EXPECT_EQ(product_of_orders(first), G.order()) << G.name();
        for (auto& f : first) EXPECT_EQ(f.abelian, is_prime(f.order));
    }
}

TEST(Composition, SolvableGroupsHavePrimeFactorsOnly) {
    // derived series reaching 1 means every factor is cyclic of prime order
    for (auto t : {"B3", "D4", "F4", "G2"}) {
        for (auto& f : composition_factors(W(t))) EXPECT_TRUE(f.abelian) << t;
    }
}

TEST(Composition, PrimeHelpers) {
    EXPECT_EQ(prime_factors(1152), (std::vector<std::uint64_t>{2, 2, 2, 2, 2, 2, 2, 3, 3}));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(25920));
    EXPECT_EQ(nonabelian_factor(60).name(), "A5");
}

TEST(ClassSignature, IsAnIsomorphismInvariant) {
    auto Z2 = small_group("Cyc2");
    EXPECT_EQ(class_signature(W("B3")), class_signature(direct_product(small_group("Sym4"), Z2)));
    EXPECT_NE(class_signature(small_group("Dih8")), class_signature(small_group("Quat8")));
}
