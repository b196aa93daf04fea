#include "weylcheck/errors.hpp"
#include "weylcheck/group_file.hpp"
#include "weylcheck/homomorphism.hpp"
#include "weylcheck/small_groups.hpp"
#include "weylcheck/weyl_group.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace weylcheck;

TEST(GroupFile, RoundTripsBothModels) {
    for (auto t : {"A3", "B3", "D4", "F4", "G2"}) {
        auto G = weyl_group(CartanType::parse(t));
        std::istringstream in(write_group_description(G));
        auto back = load_group(in);
        EXPECT_EQ(back.order(), G.order()) << t;
        for (Index g : G.generators()) EXPECT_TRUE(back.find(G.element(g)).has_value()) << t;
    }
}

TEST(GroupFile, ReadsHandWrittenSignedPermutations) {
    std::istringstream in("kind signed-perm n=3\n# S3 x Z/2\n+++ 2 1 3\n+++ 1 3 2\n--- 1 2 3\n");
    auto G = load_group(in);
    EXPECT_EQ(G.order(), 12u);
    EXPECT_TRUE(is_isomorphic(G, small_group("Dih12")));
}

TEST(GroupFile, BoundApplies) {
    std::istringstream in(write_group_description(weyl_group(CartanType::parse("F4"))));
    EXPECT_THROW(load_group(in, 100), BoundExceeded);
}

TEST(GroupFile, RejectsMalformedInput) {
    for (auto text : {"", "kind nonsense n=3\n", "kind signed-perm n=3\n+++ 1 2\n", "kind signed-perm n=3\n++ 1 2 3\n",
                      "kind signed-perm n=3\n+++ 1 1 3\n", "kind matrix n=2 denom=2\n2 0 0\n",
                      "kind matrix n=2 denom=3\n2 0 0 2\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_group_description(in), ParseError) << text;
    }
}
