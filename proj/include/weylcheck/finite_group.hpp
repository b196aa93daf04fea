#pragma once

#include "weylcheck/group_element.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace weylcheck {

using Index = std::uint32_t;
using KeyView = std::span<const std::uint8_t>;
using KeySpan = std::span<std::uint8_t>;

inline constexpr std::size_t kMaxKeyWidth = 64;
inline constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultNormalBound = 10000;

// How elements of one group are encoded and composed. Keys have a fixed width per model and
// compare bytewise; that byte order is the canonical element order.
class ElementModel {
public:
    virtual ~ElementModel() = default;

    virtual std::size_t key_width() const noexcept = 0;
    virtual void identity(KeySpan out) const = 0;
    virtual void multiply(KeyView a, KeyView b, KeySpan out) const = 0;
    virtual void invert(KeyView a, KeySpan out) const = 0;
    virtual std::uint64_t order(KeyView a) const;
    virtual std::string describe(KeyView a) const = 0;
    virtual std::string kind() const = 0;

    // Only the concrete payload models round-trip through GroupElement.
    virtual std::optional<GroupElement> decode(KeyView) const { return std::nullopt; }
    virtual bool encode(const GroupElement&, KeySpan) const { return false; }
};

std::shared_ptr<const ElementModel> signed_perm_model(int degree);
std::shared_ptr<const ElementModel> matrix_model(int dim);
std::shared_ptr<const ElementModel> model_for(const GroupElement& sample);

namespace detail {
struct GroupData;
}

struct ConjugacyClasses {
    std::vector<std::uint32_t> class_of;   // per element
    std::vector<Index> representatives;    // smallest index in each class
    std::vector<std::size_t> sizes;

    std::size_t count() const noexcept { return representatives.size(); }
};

class Subgroup;

// Explicitly enumerated finite group. Copies share the element table.
class FiniteGroup {
public:
    FiniteGroup() = default;

    // keys must be sorted, unique and closed under the model's product.
    static FiniteGroup from_sorted_keys(std::shared_ptr<const ElementModel> model,
                                        std::vector<std::uint8_t> keys,
                                        std::vector<Index> generators, std::string name = {},
                                        bool check_generators = true);

    bool valid() const noexcept { return d_ != nullptr; }
    std::size_t order() const;
    Index identity() const;
    std::span<const Index> generators() const;

    Index mul(Index a, Index b) const;
    Index inv(Index a) const;
    Index pow(Index a, std::uint64_t k) const;
    Index conj(Index x, Index g) const;       // g^-1 x g
    Index commutator(Index a, Index b) const; // a^-1 b^-1 a b
    std::uint64_t element_order(Index a) const;

    std::optional<Index> find(KeyView key) const;
    std::optional<Index> find(const GroupElement& g) const;
    Index index_of(const GroupElement& g) const;
    KeyView key(Index a) const;
    GroupElement element(Index a) const;
    std::string describe(Index a) const;

    const ElementModel& model() const;
    std::shared_ptr<const ElementModel> model_ptr() const;
    std::size_t key_width() const;

    const std::string& name() const noexcept { return name_; }
    FiniteGroup renamed(std::string name) const;

    bool is_abelian() const;
    const ConjugacyClasses& classes() const;
    Subgroup whole() const;
    Subgroup trivial() const;

    // Same element table (not just isomorphic).
    bool same_as(const FiniteGroup& other) const noexcept { return d_ == other.d_; }

private:
    std::shared_ptr<const detail::GroupData> d_;
    std::string name_;
};

// Closure of generators under the product. Throws BoundExceeded past bound elements.
FiniteGroup generate(std::span<const GroupElement> generators, std::size_t bound = kNoBound,
                     std::string name = {}, std::size_t size_hint = 0);
FiniteGroup generate_keys(std::shared_ptr<const ElementModel> model,
                          const std::vector<std::vector<std::uint8_t>>& generator_keys,
                          std::size_t bound = kNoBound, std::string name = {},
                          std::size_t size_hint = 0);

// Full check of closure, identity and inverses up to full_limit elements, sampled above.
bool verify_group_axioms(const FiniteGroup& G, std::size_t full_limit = 10000,
                         std::size_t samples = 1000000);

// A subset of an ambient group's elements that is itself a group.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(FiniteGroup ambient, boost::dynamic_bitset<> members, std::vector<Index> generators);

    const FiniteGroup& ambient() const noexcept { return ambient_; }
    std::size_t order() const noexcept { return order_; }
    bool contains(Index a) const { return (*members_)[a]; }
    const boost::dynamic_bitset<>& members() const { return *members_; }
    std::vector<Index> elements() const;
    std::span<const Index> generators() const noexcept { return generators_; }

    bool is_trivial() const noexcept { return order_ == 1; }
    bool is_whole() const { return order_ == ambient_.order(); }
    bool is_subset_of(const Subgroup& other) const;

    // Own element table, same model; index j corresponds to elements()[j].
    FiniteGroup as_group(std::string name = {}) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b);

private:
    FiniteGroup ambient_;
    std::shared_ptr<const boost::dynamic_bitset<>> members_;
    std::vector<Index> generators_;
    std::size_t order_ = 0;
};

// Orders by size, then lexicographically by sorted element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

// Incremental subgroup closure (Dimino) inside an ambient group.
class SubgroupBuilder {
public:
    explicit SubgroupBuilder(FiniteGroup ambient, std::size_t bound = kNoBound);
    SubgroupBuilder(const Subgroup& start, std::size_t bound = kNoBound);

    bool add(Index g); // true when the subgroup grew
    bool contains(Index a) const { return members_[a]; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::span<const Index> generators() const noexcept { return generators_; }
    std::span<const Index> elements() const noexcept { return elements_; }
    Subgroup build() const;

private:
    void add_coset(Index rep, std::size_t prefix);

    FiniteGroup G_;
    std::size_t bound_;
    boost::dynamic_bitset<> members_;
    std::vector<Index> elements_;
    std::vector<Index> generators_;
};

Subgroup closure(const FiniteGroup& G, std::span<const Index> generators, std::size_t bound = kNoBound);
Subgroup subgroup_from_members(const FiniteGroup& G, const boost::dynamic_bitset<>& members);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& N);
bool normalizes(const Subgroup& N, std::span<const Index> conjugators);

// Smallest subgroup containing seeds and closed under conjugation by conjugators.
// Throws BoundExceeded once the closure passes bound elements.
Subgroup normal_closure_by(const FiniteGroup& G, std::span<const Index> seeds,
                           std::span<const Index> conjugators, std::size_t bound = kNoBound);
Subgroup normal_closure(const FiniteGroup& G, std::span<const Index> seeds);
Subgroup normal_closure_in(const Subgroup& H, std::span<const Index> seeds);

Subgroup derived_subgroup(const Subgroup& H);
Subgroup derived_subgroup(const FiniteGroup& G);
// [G^(1), ..., G^(depth)] as subgroups of G.
std::vector<Subgroup> derived_series(const FiniteGroup& G, int depth);
Subgroup perfect_core(const Subgroup& H); // last term of the derived series

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, std::size_t bound = kDefaultNormalBound);

// Normal subgroups of order at most max_order, any |G|.
std::vector<Subgroup> normal_subgroups_up_to(const FiniteGroup& G, std::size_t max_order);
Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, Index x);
std::uint64_t exponent(const FiniteGroup& G);

struct QuotientMap {
    FiniteGroup group;
    std::vector<Index> image;          // ambient index -> coset index
    std::vector<Index> representative; // coset index -> smallest ambient element
};
QuotientMap quotient_map(const FiniteGroup& G, const Subgroup& N, std::string name = {});
FiniteGroup quotient(const FiniteGroup& G, const Subgroup& N, std::string name = {});

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string name = {});
bool is_product_group(const FiniteGroup& P);
std::pair<Index, Index> product_coordinates(const FiniteGroup& P, Index x);
// Inverse of product_coordinates; nullopt when the pair is not in P.
std::optional<Index> product_index(const FiniteGroup& P, Index a, Index b);
std::pair<FiniteGroup, FiniteGroup> product_factors(const FiniteGroup& P);
// Builds the subgroup of A x B on the listed coordinate pairs (closed, sorted by (a, b)).
FiniteGroup product_subset(const FiniteGroup& A, const FiniteGroup& B,
                           std::vector<std::pair<Index, Index>> pairs, std::string name = {});

} // namespace weylcheck
