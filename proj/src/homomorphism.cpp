#include "weylcheck/homomorphism.hpp"

#include "weylcheck/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace weylcheck {

namespace {
constexpr Index kUnset = 0xFFFFFFFFu;
}

// --- Homomorphism

std::optional<Homomorphism> Homomorphism::extend(FiniteGroup source, FiniteGroup target,
                                                 std::vector<Index> domain_generators, std::vector<Index> images) {
    if (domain_generators.size() != images.size()) throw std::invalid_argument("one image per generator");
    for (Index h : images)
        if (h >= target.order()) throw std::invalid_argument("image outside the target");
    const std::size_t n = source.order();
    std::vector<Index> table(n, kUnset);
    std::vector<Index> queue;
    queue.reserve(n);
    table[source.identity()] = target.identity();
    queue.push_back(source.identity());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index x = queue[head];
        for (std::size_t i = 0; i < domain_generators.size(); ++i) {
            const Index y = source.mul(x, domain_generators[i]);
            const Index z = target.mul(table[x], images[i]);
            if (table[y] == kUnset) {
                table[y] = z;
                queue.push_back(y);
            } else if (table[y] != z) {
                return std::nullopt;
            }
        }
    }
    if (queue.size() != n) throw std::invalid_argument("domain generators do not generate the source");

    Homomorphism h;
    boost::dynamic_bitset<> hit(target.order());
    for (Index v : table) hit.set(v);
    h.image_order_ = hit.count();
    h.kernel_order_ = n / h.image_order_;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.gens_ = std::move(domain_generators);
    h.images_ = std::move(images);
    h.table_ = std::move(table);
    return h;
}

std::optional<Homomorphism> Homomorphism::extend(FiniteGroup source, FiniteGroup target, std::vector<Index> images) {
    std::vector<Index> gens(source.generators().begin(), source.generators().end());
    return extend(std::move(source), std::move(target), std::move(gens), std::move(images));
}

Subgroup Homomorphism::image() const {
    boost::dynamic_bitset<> hit(target_.order());
    for (Index v : table_) hit.set(v);
    return subgroup_from_members(target_, hit);
}

Subgroup Homomorphism::kernel() const {
    boost::dynamic_bitset<> ker(source_.order());
    for (Index x = 0; x < table_.size(); ++x)
        if (table_[x] == target_.identity()) ker.set(x);
    return subgroup_from_members(source_, ker);
}

bool Homomorphism::check_all_pairs() const {
    for (Index a = 0; a < source_.order(); ++a)
        for (Index b = 0; b < source_.order(); ++b)
            if (table_[source_.mul(a, b)] != target_.mul(table_[a], table_[b])) return false;
    return true;
}

std::optional<Homomorphism> compose(const Homomorphism& first, const Homomorphism& second) {
    if (!first.target().same_as(second.source())) throw std::invalid_argument("maps do not compose");
    std::vector<Index> gens(first.domain_generators().begin(), first.domain_generators().end());
    std::vector<Index> images;
    for (Index g : gens) images.push_back(second(first(g)));
    return Homomorphism::extend(first.source(), second.target(), std::move(gens), std::move(images));
}

std::vector<std::pair<std::uint64_t, std::size_t>> class_signature(const FiniteGroup& G) {
    const auto& cc = G.classes();
    std::vector<std::pair<std::uint64_t, std::size_t>> sig;
    for (std::size_t c = 0; c < cc.count(); ++c) sig.emplace_back(G.element_order(cc.representatives[c]), cc.sizes[c]);
    std::sort(sig.begin(), sig.end());
    return sig;
}

// --- generating sets

std::vector<Index> small_generating_set(const FiniteGroup& G) {
    const std::size_t n = G.order();
    std::vector<Index> best(G.generators().begin(), G.generators().end());
    if (n == 1 || best.size() <= 2 || n > 4'000'000) return best;

    Index x = 0;
    std::uint64_t top = 0;
    for (Index i = 0; i < n; ++i) {
        const auto o = G.element_order(i);
        if (o > top) {
            top = o;
            x = i;
        }
    }
    const std::size_t tries = std::clamp<std::size_t>(20'000'000 / n, 4, 64);
    auto probe = [n](std::size_t t) { return static_cast<Index>((t * 0x9E3779B97F4A7C15ULL >> 11) % n); };
    for (std::size_t t = 1; t <= tries; ++t) {
        const Index y = probe(t);
        if (y == x) continue;
        SubgroupBuilder b(G);
        b.add(x);
        b.add(y);
        if (b.order() == n) return {x, y};
    }
    SubgroupBuilder b(G);
    b.add(x);
    for (std::size_t t = 1; b.order() < n && t <= 4 * n; ++t) b.add(probe(t));
    for (Index i = 0; b.order() < n && i < n; ++i) b.add(i);
    std::vector<Index> greedy(b.generators().begin(), b.generators().end());
    return greedy.size() < best.size() ? greedy : best;
}

// --- backtracking

namespace {

enum class Mode { Surjection, Isomorphism };

class Searcher {
public:
    Searcher(const FiniteGroup& G, const FiniteGroup& H, Mode mode, bool collect, const SearchOptions& opt)
        : G_(G), H_(H), mode_(mode), collect_(collect), opt_(opt) {}

    std::vector<Homomorphism> run() {
        if (H_.order() == 1) {
            std::vector<Index> gens(G_.generators().begin(), G_.generators().end());
            std::vector<Index> imgs(gens.size(), H_.identity());
            results_.push_back(*Homomorphism::extend(G_, H_, gens, imgs));
            return std::move(results_);
        }
        gens_ = small_generating_set(G_);
        for (Index g : gens_) gord_.push_back(G_.element_order(g));
        hord_.resize(H_.order());
        for (Index h = 0; h < H_.order(); ++h) hord_[h] = H_.element_order(h);
        if (mode_ == Mode::Isomorphism) {
            const auto& cg = G_.classes();
            for (Index g : gens_) gclass_size_.push_back(cg.sizes[cg.class_of[g]]);
        }
        if (G_.order() * gens_.size() <= kRightTableCap) right_.assign(G_.order() * gens_.size(), kUnset);
        if (H_.order() <= kTargetTableCap) {
            const std::size_t m = H_.order();
            htable_.resize(m * m);
            for (Index a = 0; a < m; ++a)
                for (Index b = 0; b < m; ++b) htable_[a * m + b] = H_.mul(a, b);
        }
        stamp_.assign(G_.order(), 0);
        value_.assign(G_.order(), 0);
        img_.assign(gens_.size(), 0);
        dfs(0);
        return std::move(results_);
    }

    SearchStats stats;

private:
    bool admissible(std::size_t level, Index h) const {
        if (mode_ == Mode::Isomorphism) {
            const auto& ch = H_.classes();
            return hord_[h] == gord_[level] && ch.sizes[ch.class_of[h]] == gclass_size_[level];
        }
        return gord_[level] % hord_[h] == 0;
    }

    std::vector<Index> candidates(std::size_t level) {
        std::vector<Index> out;
        if (!collect_ && level == 0) {
            for (Index r : H_.classes().representatives)
                if (admissible(0, r)) out.push_back(r);
            return out;
        }
        if (!collect_ && level == 1) {
            // Orbit representatives under the centralizer of the first image.
            const Subgroup C = centralizer(H_, img_[0]);
            std::vector<char> seen(H_.order(), 0);
            std::vector<Index> stack;
            for (Index h = 0; h < H_.order(); ++h) {
                if (seen[h]) continue;
                seen[h] = 1;
                if (admissible(1, h)) out.push_back(h);
                stack.assign(1, h);
                while (!stack.empty()) {
                    const Index y = stack.back();
                    stack.pop_back();
                    for (Index c : C.generators()) {
                        const Index z = H_.conj(y, c);
                        if (!seen[z]) {
                            seen[z] = 1;
                            stack.push_back(z);
                        }
                    }
                }
            }
            return out;
        }
        for (Index h = 0; h < H_.order(); ++h)
            if (admissible(level, h)) out.push_back(h);
        return out;
    }

    // Walks the Cayley graph of <g_1..g_upto> from the identity, at most cap vertices.
    bool consistent(std::size_t upto, std::size_t cap) {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        queue_.clear();
        const Index e = G_.identity();
        stamp_[e] = epoch_;
        value_[e] = H_.identity();
        queue_.push_back(e);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const Index x = queue_[head];
            for (std::size_t i = 0; i < upto; ++i) {
                const Index y = right_mul(x, i);
                const Index z = htable_.empty() ? H_.mul(value_[x], img_[i]) : htable_[value_[x] * H_.order() + img_[i]];
                if (stamp_[y] == epoch_) {
                    if (value_[y] != z) return false;
                } else if (queue_.size() < cap) {
                    stamp_[y] = epoch_;
                    value_[y] = z;
                    queue_.push_back(y);
                }
            }
        }
        return true;
    }

    // x g_i, memoized when the table fits.
    Index right_mul(Index x, std::size_t i) {
        if (right_.empty()) return G_.mul(x, gens_[i]);
        Index& slot = right_[x * gens_.size() + i];
        if (slot == kUnset) slot = G_.mul(x, gens_[i]);
        return slot;
    }

    bool generates_target() const {
        SubgroupBuilder b(H_);
        for (Index h : img_) b.add(h);
        return b.order() == H_.order();
    }

    bool dfs(std::size_t level) {
        const auto cand = candidates(level);
        const bool last = level + 1 == gens_.size();
        for (Index h : cand) {
            if (++stats.nodes > opt_.node_budget) throw SearchBudgetExceeded(opt_.node_budget);
            img_[level] = h;
            if (!consistent(level + 1, opt_.partial_check_cap)) continue;
            if (!last) {
                if (dfs(level + 1)) return true;
                continue;
            }
            if (!generates_target()) continue;
            ++stats.full_checks;
            if (auto hom = Homomorphism::extend(G_, H_, gens_, img_)) {
                results_.push_back(std::move(*hom));
                if (!collect_) return true;
            }
        }
        return false;
    }

    const FiniteGroup& G_;
    const FiniteGroup& H_;
    Mode mode_;
    bool collect_;
    SearchOptions opt_;
    std::vector<Index> gens_;
    std::vector<std::uint64_t> gord_;
    std::vector<std::uint64_t> hord_;
    std::vector<std::size_t> gclass_size_;
    std::vector<Index> img_;
    std::vector<std::uint32_t> stamp_;
    std::vector<Index> value_;
    std::vector<Index> queue_;
    std::vector<Index> right_;
    std::vector<Index> htable_;
    std::uint32_t epoch_ = 0;
    static constexpr Index kUnset = std::numeric_limits<Index>::max();
    static constexpr std::size_t kRightTableCap = 48'000'000;
    static constexpr std::size_t kTargetTableCap = 2048;
    std::vector<Homomorphism> results_;
};

bool same_signature(const FiniteGroup& G, const FiniteGroup& H) {
    return G.order() == H.order() && class_signature(G) == class_signature(H);
}

void merge(SearchStats* into, const SearchStats& from) {
    if (!into) return;
    into->nodes += from.nodes;
    into->full_checks += from.full_checks;
}

} // namespace

std::optional<Homomorphism> surjection_exists(const FiniteGroup& G, const FiniteGroup& H, const SearchOptions& options,
                                              SearchStats* stats) {
    if (H.order() > G.order() || G.order() % H.order() != 0) return std::nullopt;
    Searcher s(G, H, Mode::Surjection, false, options);
    auto found = s.run();
    merge(stats, s.stats);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::optional<Homomorphism> is_isomorphic(const FiniteGroup& G, const FiniteGroup& H, const SearchOptions& options,
                                          SearchStats* stats) {
    if (!same_signature(G, H)) return std::nullopt;
    Searcher s(G, H, Mode::Isomorphism, false, options);
    auto found = s.run();
    merge(stats, s.stats);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::optional<Homomorphism> surjection_by_kernels(const FiniteGroup& G, const FiniteGroup& H,
                                                  const SearchOptions& options, SearchStats* stats) {
    if (H.order() > G.order() || G.order() % H.order() != 0) return std::nullopt;
    const std::size_t index = G.order() / H.order();
    const auto kernels = normal_subgroups_up_to(G, index);
    // G/K has abelianization of order |G| / |K G'|; it must match H's before a quotient is built.
    const Subgroup DG = derived_subgroup(G);
    const std::size_t h_ab = H.order() / derived_subgroup(H).order();
    for (const Subgroup& K : kernels) {
        if (K.order() != index) continue;
        const std::size_t meet = (K.members() & DG.members()).count();
        if (G.order() * meet / (K.order() * DG.order()) != h_ab) continue;
        const auto qm = quotient_map(G, K);
        auto iso = is_isomorphic(qm.group, H, options, stats);
        if (!iso) continue;
        std::vector<Index> gens(G.generators().begin(), G.generators().end());
        std::vector<Index> images;
        for (Index g : gens) images.push_back((*iso)(qm.image[g]));
        return Homomorphism::extend(G, H, std::move(gens), std::move(images));
    }
    return std::nullopt;
}

std::vector<Homomorphism> all_isomorphisms(const FiniteGroup& G, const FiniteGroup& H, const SearchOptions& options,
                                           SearchStats* stats) {
    if (!same_signature(G, H)) return {};
    Searcher s(G, H, Mode::Isomorphism, true, options);
    auto found = s.run();
    merge(stats, s.stats);
    return found;
}

} // namespace weylcheck
