#pragma once

#include "weylcheck/finite_group.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weylcheck {

// A simple group known only by its order; abelian exactly when the order is prime.
struct SimpleFactorId {
    std::uint64_t order = 1;
    bool abelian = true;

    // "Z/2", "A5", "U4(2)"; orders shared by two simple groups read "A8|L3(4)".
    std::string name() const;
    bool ambiguous() const;

    friend auto operator<=>(const SimpleFactorId&, const SimpleFactorId&) = default;
};

SimpleFactorId abelian_factor(std::uint64_t prime);
SimpleFactorId nonabelian_factor(std::uint64_t order);

enum class TieBreak { First, Last };

inline constexpr std::size_t kDefaultCompositionBound = 20'000'000;

// Jordan-Hoelder factors, sorted. Groups up to kDefaultNormalBound go through maximal normal
// subgroups literally; larger ones split along the derived subgroup and class normal closures.
std::vector<SimpleFactorId> composition_factors(const FiniteGroup& G, TieBreak tie = TieBreak::First,
                                                std::size_t bound = kDefaultCompositionBound);

// Distinct factors, sorted.
std::vector<SimpleFactorId> jh_set(std::span<const SimpleFactorId> factors);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n); // with multiplicity, ascending

} // namespace weylcheck
