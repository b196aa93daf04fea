#pragma once

#include "weylcheck/finite_group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace weylcheck {

// A map defined by images of a generating set, checked edge by edge on the Cayley graph of the
// source: phi(x g) = phi(x) phi(g) for every element x and listed generator g.
class Homomorphism {
public:
    // nullopt when the images do not extend to a homomorphism.
    static std::optional<Homomorphism> extend(FiniteGroup source, FiniteGroup target,
                                              std::vector<Index> domain_generators,
                                              std::vector<Index> images);
    static std::optional<Homomorphism> extend(FiniteGroup source, FiniteGroup target,
                                              std::vector<Index> images);

    const FiniteGroup& source() const noexcept { return source_; }
    const FiniteGroup& target() const noexcept { return target_; }
    std::span<const Index> domain_generators() const noexcept { return gens_; }
    std::span<const Index> generator_images() const noexcept { return images_; }

    Index operator()(Index x) const { return table_[x]; }
    std::span<const Index> table() const noexcept { return table_; }

    bool is_surjective() const noexcept { return image_order_ == target_.order(); }
    bool is_injective() const noexcept { return kernel_order_ == 1; }
    bool is_bijective() const noexcept { return is_surjective() && is_injective(); }
    Subgroup image() const;
    Subgroup kernel() const;

    // Recheck phi(xy) = phi(x) phi(y) on every pair (used by tests on small groups).
    bool check_all_pairs() const;

private:
    Homomorphism() = default;

    FiniteGroup source_;
    FiniteGroup target_;
    std::vector<Index> gens_;
    std::vector<Index> images_;
    std::vector<Index> table_;
    std::size_t image_order_ = 0;
    std::size_t kernel_order_ = 0;
};

std::optional<Homomorphism> compose(const Homomorphism& first, const Homomorphism& second);

struct SearchOptions {
    std::uint64_t node_budget = 100'000'000;
    std::size_t partial_check_cap = 4096;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t full_checks = 0;
};

// A few elements generating G, found deterministically; two when such a pair turns up quickly.
std::vector<Index> small_generating_set(const FiniteGroup& G);

// Backtracking over images of a small generating set of G. Throws SearchBudgetExceeded.
std::optional<Homomorphism> surjection_exists(const FiniteGroup& G, const FiniteGroup& H,
                                              const SearchOptions& options = {}, SearchStats* stats = nullptr);
// Same question answered through kernels: normal subgroups of index |H|, each quotient tested
// against H. Cheaper than backtracking when G needs many generators and H is large.
std::optional<Homomorphism> surjection_by_kernels(const FiniteGroup& G, const FiniteGroup& H,
                                                  const SearchOptions& options = {}, SearchStats* stats = nullptr);
std::optional<Homomorphism> is_isomorphic(const FiniteGroup& G, const FiniteGroup& H,
                                          const SearchOptions& options = {}, SearchStats* stats = nullptr);
// Every isomorphism G -> H (one per automorphism of H when G and H are isomorphic).
std::vector<Homomorphism> all_isomorphisms(const FiniteGroup& G, const FiniteGroup& H,
                                           const SearchOptions& options = {}, SearchStats* stats = nullptr);

// Multiset of (element order, class size) pairs, sorted.
std::vector<std::pair<std::uint64_t, std::size_t>> class_signature(const FiniteGroup& G);

} // namespace weylcheck
