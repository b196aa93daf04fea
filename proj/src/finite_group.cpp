#include "weylcheck/finite_group.hpp"

#include "key_table.hpp"
#include "models.hpp"
#include "weylcheck/errors.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace weylcheck {

namespace detail {

struct GroupData {
    GroupData(std::shared_ptr<const ElementModel> m, KeyTable t)
        : model(std::move(m)), table(std::move(t)) {}

    std::shared_ptr<const ElementModel> model;
    KeyTable table;
    Index identity = 0;
    std::vector<Index> generators;

    mutable std::once_flag inverse_once;
    mutable std::vector<Index> inverses;
    mutable std::once_flag class_once;
    mutable ConjugacyClasses classes;
};

} // namespace detail

namespace {

using Buffer = std::array<std::uint8_t, kMaxKeyWidth>;

std::vector<std::uint8_t> sort_keys(std::vector<std::uint8_t> keys, std::size_t width) {
    const std::size_t n = keys.size() / width;
    if (width == 8) {
        std::vector<std::uint64_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = detail::load_be64(keys.data() + 8 * i);
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < n; ++i) detail::store_be64(keys.data() + 8 * i, v[i]);
        return keys;
    }
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) {
        return std::memcmp(keys.data() + a * width, keys.data() + b * width, width) < 0;
    });
    std::vector<std::uint8_t> out(keys.size());
    for (std::size_t i = 0; i < n; ++i)
        std::memcpy(out.data() + i * width, keys.data() + std::size_t(perm[i]) * width, width);
    return out;
}

std::size_t bitset_hash(const boost::dynamic_bitset<>& b) {
    std::vector<boost::dynamic_bitset<>::block_type> blocks(b.num_blocks());
    boost::to_block_range(b, blocks.begin());
    std::uint64_t h = b.size();
    for (auto x : blocks) h = detail::mix64(h ^ static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
}

} // namespace

// --- FiniteGroup

FiniteGroup FiniteGroup::from_sorted_keys(std::shared_ptr<const ElementModel> model,
                                          std::vector<std::uint8_t> keys,
                                          std::vector<Index> generators, std::string name,
                                          bool check_generators) {
    const std::size_t w = model->key_width();
    if (w == 0 || w > kMaxKeyWidth || keys.size() % w != 0 || keys.empty())
        throw std::invalid_argument("malformed key array");
    const std::size_t n = keys.size() / w;
    for (std::size_t i = 1; i < n; ++i)
        if (std::memcmp(keys.data() + (i - 1) * w, keys.data() + i * w, w) >= 0)
            throw std::invalid_argument("keys must be sorted and unique");

    auto data = std::make_shared<detail::GroupData>(model, detail::KeyTable::from_keys(w, std::move(keys)));
    Buffer id{};
    model->identity({id.data(), w});
    const auto idx = data->table.find({id.data(), w});
    if (!idx) throw std::invalid_argument("identity missing from element set");
    data->identity = *idx;

    FiniteGroup G;
    G.d_ = data;
    G.name_ = std::move(name);
    if (!check_generators) {
        data->generators = std::move(generators);
        return G;
    }
    // Keep an irredundant generating list; check that it reaches every element.
    SubgroupBuilder b(G);
    for (Index g : generators) {
        if (g >= n) throw std::invalid_argument("generator index out of range");
        b.add(g);
    }
    for (Index x = 0; b.order() < n && x < n; ++x) b.add(x);
    data->generators.assign(b.generators().begin(), b.generators().end());
    return G;
}

std::size_t FiniteGroup::order() const { return d_->table.size(); }
Index FiniteGroup::identity() const { return d_->identity; }
std::span<const Index> FiniteGroup::generators() const { return d_->generators; }
KeyView FiniteGroup::key(Index a) const { return d_->table.key(a); }
const ElementModel& FiniteGroup::model() const { return *d_->model; }
std::shared_ptr<const ElementModel> FiniteGroup::model_ptr() const { return d_->model; }
std::size_t FiniteGroup::key_width() const { return d_->table.width(); }

FiniteGroup FiniteGroup::renamed(std::string name) const {
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
}

Index FiniteGroup::mul(Index a, Index b) const {
    Buffer buf;
    const std::size_t w = d_->table.width();
    d_->model->multiply(key(a), key(b), {buf.data(), w});
    const auto r = d_->table.find({buf.data(), w});
    if (!r) throw std::logic_error("product left the element set of " + (name_.empty() ? "group" : name_));
    return *r;
}

Index FiniteGroup::inv(Index a) const {
    std::call_once(d_->inverse_once, [this] {
        const std::size_t n = order(), w = d_->table.width();
        d_->inverses.resize(n);
        Buffer buf;
        for (Index i = 0; i < n; ++i) {
            d_->model->invert(key(i), {buf.data(), w});
            const auto r = d_->table.find({buf.data(), w});
            if (!r) throw std::logic_error("inverse left the element set");
            d_->inverses[i] = *r;
        }
    });
    return d_->inverses[a];
}

Index FiniteGroup::pow(Index a, std::uint64_t k) const {
    Index result = identity(), base = a;
    while (k) {
        if (k & 1U) result = mul(result, base);
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

Index FiniteGroup::conj(Index x, Index g) const {
    Buffer t, u;
    const std::size_t w = d_->table.width();
    d_->model->multiply(key(inv(g)), key(x), {t.data(), w});
    d_->model->multiply({t.data(), w}, key(g), {u.data(), w});
    const auto r = d_->table.find({u.data(), w});
    if (!r) throw std::logic_error("conjugate left the element set");
    return *r;
}

Index FiniteGroup::commutator(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

std::uint64_t FiniteGroup::element_order(Index a) const { return d_->model->order(key(a)); }

std::optional<Index> FiniteGroup::find(KeyView k) const {
    if (k.size() != d_->table.width()) return std::nullopt;
    return d_->table.find(k);
}

std::optional<Index> FiniteGroup::find(const GroupElement& g) const {
    Buffer buf;
    if (!d_->model->encode(g, {buf.data(), d_->table.width()})) return std::nullopt;
    return d_->table.find({buf.data(), d_->table.width()});
}

Index FiniteGroup::index_of(const GroupElement& g) const {
    const auto r = find(g);
    if (!r) throw std::invalid_argument("element " + to_string(g) + " is not in " + name_);
    return *r;
}

GroupElement FiniteGroup::element(Index a) const {
    auto e = d_->model->decode(key(a));
    if (!e) throw std::logic_error("elements of a derived group have no concrete payload");
    return *e;
}

std::string FiniteGroup::describe(Index a) const { return d_->model->describe(key(a)); }

bool FiniteGroup::is_abelian() const {
    const auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    return true;
}

const ConjugacyClasses& FiniteGroup::classes() const {
    std::call_once(d_->class_once, [this] {
        const std::size_t n = order();
        constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
        ConjugacyClasses cc;
        cc.class_of.assign(n, kUnset);
        std::vector<Index> stack;
        const auto gens = generators();
        for (Index x = 0; x < n; ++x) {
            if (cc.class_of[x] != kUnset) continue;
            const auto c = static_cast<std::uint32_t>(cc.representatives.size());
            cc.representatives.push_back(x);
            std::size_t size = 1;
            cc.class_of[x] = c;
            stack.assign(1, x);
            while (!stack.empty()) {
                const Index y = stack.back();
                stack.pop_back();
                for (Index g : gens) {
                    const Index z = conj(y, g);
                    if (cc.class_of[z] == kUnset) {
                        cc.class_of[z] = c;
                        ++size;
                        stack.push_back(z);
                    }
                }
            }
            cc.sizes.push_back(size);
        }
        d_->classes = std::move(cc);
    });
    return d_->classes;
}

Subgroup FiniteGroup::whole() const {
    boost::dynamic_bitset<> all(order());
    all.set();
    return Subgroup(*this, std::move(all), {generators().begin(), generators().end()});
}

Subgroup FiniteGroup::trivial() const {
    boost::dynamic_bitset<> one(order());
    one.set(identity());
    return Subgroup(*this, std::move(one), {});
}

// --- generation

FiniteGroup generate_keys(std::shared_ptr<const ElementModel> model,
                          const std::vector<std::vector<std::uint8_t>>& generator_keys, std::size_t bound,
                          std::string name, std::size_t size_hint) {
    if (generator_keys.empty()) throw std::invalid_argument("generate needs at least one generator");
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const std::size_t w = model->key_width();
    detail::KeyTable table(w);
    if (size_hint) table.reserve(std::min(size_hint, bound));

    Buffer id{}, buf{}, rep{};
    model->identity({id.data(), w});
    table.insert({id.data(), w});

    std::vector<std::vector<std::uint8_t>> used;
    std::vector<Index> reps;
    auto add_coset = [&](KeyView r_in, std::size_t prefix) {
        Buffer r;
        std::copy(r_in.begin(), r_in.end(), r.begin());
        for (Index h = 0; h < prefix; ++h) {
            model->multiply(table.key(h), {r.data(), w}, {buf.data(), w});
            const auto [idx, fresh] = table.insert({buf.data(), w});
            if (h == 0) reps.push_back(idx);
            if (!fresh) throw std::logic_error("coset overlap during closure");
            if (table.size() > bound) throw BoundExceeded(bound, "group closure too large");
        }
    };

    for (const auto& s : generator_keys) {
        if (s.size() != w) throw std::invalid_argument("generator key width mismatch");
        if (table.find(s)) continue;
        used.push_back(s);
        const std::size_t prefix = table.size();
        reps.clear();
        add_coset(s, prefix);
        for (std::size_t pos = 0; pos < reps.size(); ++pos) {
            for (const auto& g : used) {
                const auto rk = table.key(reps[pos]);
                std::copy(rk.begin(), rk.end(), rep.begin());
                model->multiply({rep.data(), w}, g, {buf.data(), w});
                if (!table.find({buf.data(), w})) add_coset({buf.data(), w}, prefix);
            }
        }
    }

    auto keys = sort_keys(table.release(), w);
    // Generators were already chosen irredundantly; pass them on in the new indexing.
    detail::KeyTable probe = detail::KeyTable::from_keys(w, keys);
    std::vector<Index> gens;
    for (const auto& s : used) gens.push_back(*probe.find(s));
    probe = detail::KeyTable(w);
    return FiniteGroup::from_sorted_keys(std::move(model), std::move(keys), std::move(gens), std::move(name),
                                         false);
}

FiniteGroup generate(std::span<const GroupElement> generators, std::size_t bound, std::string name,
                     std::size_t size_hint) {
    if (generators.empty()) throw std::invalid_argument("generate needs at least one generator");
    for (const auto& g : generators)
        if (!composable(g, generators.front())) throw std::invalid_argument("generators are not composable");
    auto model = model_for(generators.front());
    std::vector<std::vector<std::uint8_t>> keys;
    for (const auto& g : generators) {
        std::vector<std::uint8_t> k(model->key_width());
        if (!model->encode(g, k)) throw std::invalid_argument("generator cannot be encoded: " + to_string(g));
        keys.push_back(std::move(k));
    }
    return generate_keys(std::move(model), keys, bound, std::move(name), size_hint);
}

bool verify_group_axioms(const FiniteGroup& G, std::size_t full_limit, std::size_t samples) {
    const std::size_t n = G.order();
    const Index e = G.identity();
    try {
        for (Index a = 0; a < n; ++a) {
            if (G.mul(a, e) != a || G.mul(e, a) != a) return false;
            if (G.mul(a, G.inv(a)) != e) return false;
        }
        if (n <= full_limit) {
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b) (void)G.mul(a, b);
        } else {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
            for (std::size_t k = 0; k < samples; ++k) (void)G.mul(pick(rng), pick(rng));
        }
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

// --- Subgroup

Subgroup::Subgroup(FiniteGroup ambient, boost::dynamic_bitset<> members, std::vector<Index> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    if (members.size() != ambient_.order()) throw std::invalid_argument("member set has wrong size");
    order_ = members.count();
    members_ = std::make_shared<const boost::dynamic_bitset<>>(std::move(members));
}

std::vector<Index> Subgroup::elements() const {
    std::vector<Index> out;
    out.reserve(order_);
    for (auto i = members_->find_first(); i != boost::dynamic_bitset<>::npos; i = members_->find_next(i))
        out.push_back(static_cast<Index>(i));
    return out;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return ambient_.same_as(other.ambient_) && members_->is_subset_of(*other.members_);
}

FiniteGroup Subgroup::as_group(std::string name) const {
    const auto elems = elements();
    const std::size_t w = ambient_.key_width();
    std::vector<std::uint8_t> keys(elems.size() * w);
    for (std::size_t j = 0; j < elems.size(); ++j) {
        const auto k = ambient_.key(elems[j]);
        std::copy(k.begin(), k.end(), keys.begin() + static_cast<std::ptrdiff_t>(j * w));
    }
    std::vector<Index> gens;
    for (Index g : generators_)
        gens.push_back(static_cast<Index>(std::lower_bound(elems.begin(), elems.end(), g) - elems.begin()));
    return FiniteGroup::from_sorted_keys(ambient_.model_ptr(), std::move(keys), std::move(gens), std::move(name));
}

bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_.same_as(b.ambient_) && a.order_ == b.order_ && *a.members_ == *b.members_;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto diff = a.members() ^ b.members();
    const auto first = diff.find_first();
    if (first == boost::dynamic_bitset<>::npos) return false;
    return a.members()[first];
}

// --- SubgroupBuilder (Dimino)

SubgroupBuilder::SubgroupBuilder(FiniteGroup ambient, std::size_t bound)
    : G_(std::move(ambient)), bound_(bound), members_(G_.order()) {
    members_.set(G_.identity());
    elements_.push_back(G_.identity());
}

SubgroupBuilder::SubgroupBuilder(const Subgroup& start, std::size_t bound)
    : G_(start.ambient()), bound_(bound), members_(start.members()), elements_(start.elements()),
      generators_(start.generators().begin(), start.generators().end()) {}

void SubgroupBuilder::add_coset(Index rep, std::size_t prefix) {
    for (std::size_t i = 0; i < prefix; ++i) {
        const Index x = G_.mul(elements_[i], rep);
        members_.set(x);
        elements_.push_back(x);
    }
    if (elements_.size() > bound_) throw BoundExceeded(bound_, "subgroup closure too large");
}

bool SubgroupBuilder::add(Index s) {
    if (members_[s]) return false;
    generators_.push_back(s);
    const std::size_t prefix = elements_.size();
    std::vector<Index> reps{s};
    add_coset(s, prefix);
    for (std::size_t pos = 0; pos < reps.size(); ++pos)
        for (Index g : generators_) {
            const Index x = G_.mul(reps[pos], g);
            if (!members_[x]) {
                add_coset(x, prefix);
                reps.push_back(x);
            }
        }
    return true;
}

Subgroup SubgroupBuilder::build() const { return Subgroup(G_, members_, generators_); }

// --- subgroup algorithms

Subgroup closure(const FiniteGroup& G, std::span<const Index> generators, std::size_t bound) {
    SubgroupBuilder b(G, bound);
    for (Index g : generators) b.add(g);
    return b.build();
}

Subgroup subgroup_from_members(const FiniteGroup& G, const boost::dynamic_bitset<>& members) {
    SubgroupBuilder b(G);
    for (auto i = members.find_first(); i != boost::dynamic_bitset<>::npos; i = members.find_next(i)) {
        const auto x = static_cast<Index>(i);
        if (!b.contains(x)) b.add(x);
        if (b.order() > members.count()) break;
    }
    Subgroup s = b.build();
    if (s.members() != members) throw std::invalid_argument("member set is not a subgroup");
    return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (!a.ambient().same_as(b.ambient())) throw std::invalid_argument("subgroups of different groups");
    return subgroup_from_members(a.ambient(), a.members() & b.members());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    if (!a.ambient().same_as(b.ambient())) throw std::invalid_argument("subgroups of different groups");
    if (b.is_subset_of(a)) return a;
    if (a.is_subset_of(b)) return b;
    SubgroupBuilder builder(a);
    for (Index g : b.generators()) builder.add(g);
    return builder.build();
}

bool normalizes(const Subgroup& N, std::span<const Index> conjugators) {
    const auto& G = N.ambient();
    for (Index h : N.generators())
        for (Index c : conjugators)
            if (!N.contains(G.conj(h, c))) return false;
    return true;
}

bool is_normal(const Subgroup& N) { return normalizes(N, N.ambient().generators()); }

Subgroup normal_closure_by(const FiniteGroup& G, std::span<const Index> seeds,
                           std::span<const Index> conjugators, std::size_t bound) {
    SubgroupBuilder b(G, bound);
    for (Index s : seeds) b.add(s);
    for (std::size_t done = 0; done < b.generators().size(); ++done) {
        const Index h = b.generators()[done];
        for (Index c : conjugators) b.add(G.conj(h, c));
    }
    return b.build();
}

Subgroup normal_closure(const FiniteGroup& G, std::span<const Index> seeds) {
    return normal_closure_by(G, seeds, G.generators());
}

Subgroup normal_closure_in(const Subgroup& H, std::span<const Index> seeds) {
    for (Index s : seeds)
        if (!H.contains(s)) throw std::invalid_argument("normal closure seed outside the subgroup");
    return normal_closure_by(H.ambient(), seeds, H.generators());
}

Subgroup derived_subgroup(const Subgroup& H) {
    const auto& G = H.ambient();
    const auto gens = H.generators();
    std::vector<Index> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) seeds.push_back(G.commutator(gens[i], gens[j]));
    return normal_closure_in(H, seeds);
}

Subgroup derived_subgroup(const FiniteGroup& G) { return derived_subgroup(G.whole()); }

std::vector<Subgroup> derived_series(const FiniteGroup& G, int depth) {
    if (depth < 1) throw std::invalid_argument("derived series depth must be at least 1");
    std::vector<Subgroup> terms;
    Subgroup current = G.whole();
    for (int k = 0; k < depth; ++k) {
        current = current.is_trivial() ? current : derived_subgroup(current);
        terms.push_back(current);
    }
    return terms;
}

Subgroup perfect_core(const Subgroup& H) {
    Subgroup current = H;
    while (true) {
        Subgroup next = derived_subgroup(current);
        if (next.order() == current.order()) return current;
        current = std::move(next);
    }
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, std::size_t bound) {
    if (G.order() > bound) throw BoundExceeded(bound, "normal subgroup enumeration");
    std::vector<Subgroup> found;
    std::unordered_multimap<std::size_t, std::size_t> seen;
    auto remember = [&](Subgroup s) {
        const std::size_t h = bitset_hash(s.members());
        const auto [lo, hi] = seen.equal_range(h);
        for (auto it = lo; it != hi; ++it)
            if (found[it->second].members() == s.members()) return;
        seen.emplace(h, found.size());
        found.push_back(std::move(s));
    };
    remember(G.trivial());
    const auto& cc = G.classes();
    for (Index rep : cc.representatives) {
        if (rep == G.identity()) continue;
        const Index seed[] = {rep};
        remember(normal_closure(G, seed));
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
            Subgroup a = found[i], b = found[j];
            remember(join(a, b));
        }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

std::vector<Subgroup> normal_subgroups_up_to(const FiniteGroup& G, std::size_t max_order) {
    std::vector<Subgroup> found;
    std::unordered_multimap<std::size_t, std::size_t> seen;
    auto remember = [&](Subgroup s) {
        const std::size_t h = bitset_hash(s.members());
        const auto [lo, hi] = seen.equal_range(h);
        for (auto it = lo; it != hi; ++it)
            if (found[it->second].members() == s.members()) return;
        seen.emplace(h, found.size());
        found.push_back(std::move(s));
    };
    // Closures past max_order are dropped; anything above them is too.
    auto bounded = [&](std::span<const Index> seeds) -> std::optional<Subgroup> {
        try {
            return normal_closure_by(G, seeds, G.generators(), max_order);
        } catch (const BoundExceeded&) {
            return std::nullopt;
        }
    };
    remember(G.trivial());
    const auto& cc = G.classes();
    for (std::size_t c = 0; c < cc.count(); ++c) {
        const Index rep = cc.representatives[c];
        if (rep == G.identity() || cc.sizes[c] >= max_order) continue;
        const Index seed[] = {rep};
        if (auto N = bounded(seed)) remember(std::move(*N));
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
            // A proper join at least doubles the larger side.
            if (2 * std::max(found[i].order(), found[j].order()) > max_order) continue;
            std::vector<Index> seeds(found[i].generators().begin(), found[i].generators().end());
            seeds.insert(seeds.end(), found[j].generators().begin(), found[j].generators().end());
            if (auto N = bounded(seeds)) remember(std::move(*N));
        }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

Subgroup center(const FiniteGroup& G) {
    boost::dynamic_bitset<> bits(G.order());
    const auto gens = G.generators();
    for (Index x = 0; x < G.order(); ++x) {
        bool central = true;
        for (Index g : gens)
            if (G.mul(x, g) != G.mul(g, x)) {
                central = false;
                break;
            }
        if (central) bits.set(x);
    }
    return subgroup_from_members(G, bits);
}

Subgroup centralizer(const FiniteGroup& G, Index x) {
    boost::dynamic_bitset<> bits(G.order());
    for (Index y = 0; y < G.order(); ++y)
        if (G.mul(x, y) == G.mul(y, x)) bits.set(y);
    return subgroup_from_members(G, bits);
}

std::uint64_t exponent(const FiniteGroup& G) {
    // Every element shares its order with its class representative. Above a couple of million
    // elements the class computation costs more than scanning orders directly.
    constexpr std::size_t kClassScanLimit = 2'000'000;
    std::uint64_t e = 1;
    if (G.order() <= kClassScanLimit) {
        for (Index rep : G.classes().representatives) e = std::lcm(e, G.element_order(rep));
    } else {
        for (Index x = 0; x < G.order(); ++x) e = std::lcm(e, G.element_order(x));
    }
    return e;
}

QuotientMap quotient_map(const FiniteGroup& G, const Subgroup& N, std::string name) {
    if (!N.ambient().same_as(G)) throw std::invalid_argument("subgroup of a different group");
    if (!is_normal(N)) throw NotNormal("subgroup is not normal");
    constexpr Index kUnset = 0xFFFFFFFFu;
    QuotientMap q;
    q.image.assign(G.order(), kUnset);
    const auto nel = N.elements();
    for (Index x = 0; x < G.order(); ++x) {
        if (q.image[x] != kUnset) continue;
        const auto c = static_cast<Index>(q.representative.size());
        q.representative.push_back(x);
        for (Index h : nel) q.image[G.mul(x, h)] = c;
    }
    const std::size_t m = q.representative.size();
    std::vector<std::uint8_t> keys(4 * m);
    for (std::size_t c = 0; c < m; ++c) detail::store_be32(keys.data() + 4 * c, static_cast<std::uint32_t>(c));
    std::vector<Index> gens;
    for (Index g : G.generators()) gens.push_back(q.image[g]);
    auto model = std::make_shared<detail::QuotientModel>(G, q.image, q.representative);
    q.group = FiniteGroup::from_sorted_keys(std::move(model), std::move(keys), std::move(gens), std::move(name));
    return q;
}

FiniteGroup quotient(const FiniteGroup& G, const Subgroup& N, std::string name) {
    return quotient_map(G, N, std::move(name)).group;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string name) {
    const std::size_t n = A.order() * B.order();
    if (n >= 0xFFFFFFFFu) throw BoundExceeded(0xFFFFFFFFu, "direct product too large");
    std::vector<std::uint8_t> keys(8 * n);
    std::size_t pos = 0;
    for (Index a = 0; a < A.order(); ++a)
        for (Index b = 0; b < B.order(); ++b, pos += 8)
            detail::ProductModel::join(a, b, {keys.data() + pos, 8});
    std::vector<Index> gens;
    for (Index g : A.generators()) gens.push_back(static_cast<Index>(g * B.order() + B.identity()));
    for (Index g : B.generators()) gens.push_back(static_cast<Index>(A.identity() * B.order() + g));
    auto model = std::make_shared<detail::ProductModel>(A, B);
    return FiniteGroup::from_sorted_keys(std::move(model), std::move(keys), std::move(gens), std::move(name));
}

bool is_product_group(const FiniteGroup& P) {
    return dynamic_cast<const detail::ProductModel*>(&P.model()) != nullptr;
}

std::pair<Index, Index> product_coordinates(const FiniteGroup& P, Index x) {
    if (!is_product_group(P)) throw std::invalid_argument("not a product group");
    return detail::ProductModel::split(P.key(x));
}

std::optional<Index> product_index(const FiniteGroup& P, Index a, Index b) {
    if (!is_product_group(P)) throw std::invalid_argument("not a product group");
    std::uint8_t key[8];
    detail::ProductModel::join(a, b, {key, 8});
    return P.find(KeyView(key, 8));
}

std::pair<FiniteGroup, FiniteGroup> product_factors(const FiniteGroup& P) {
    auto m = dynamic_cast<const detail::ProductModel*>(&P.model());
    if (!m) throw std::invalid_argument("not a product group");
    return {m->first(), m->second()};
}

FiniteGroup product_subset(const FiniteGroup& A, const FiniteGroup& B, std::vector<std::pair<Index, Index>> pairs,
                           std::string name) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<std::uint8_t> keys(8 * pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        detail::ProductModel::join(pairs[i].first, pairs[i].second, {keys.data() + 8 * i, 8});
    auto model = std::make_shared<detail::ProductModel>(A, B);
    return FiniteGroup::from_sorted_keys(std::move(model), std::move(keys), {}, std::move(name));
}

} // namespace weylcheck
