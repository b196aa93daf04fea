#include "weylcheck/composition.hpp"

#include "weylcheck/errors.hpp"

#include <algorithm>
#include <map>

namespace weylcheck {

namespace {

const std::map<std::uint64_t, std::string>& simple_names() {
    static const std::map<std::uint64_t, std::string> names = {
        {60, "A5"},           {168, "L2(7)"},       {360, "A6"},      {504, "L2(8)"},
        {660, "L2(11)"},      {1092, "L2(13)"},     {2520, "A7"},     {20160, "A8|L3(4)"},
        {25920, "U4(2)"},     {181440, "A9"},       {1451520, "Sp6(2)"}, {1814400, "A10"},
        {174182400, "O8+(2)"},
    };
    return names;
}

std::vector<SimpleFactorId> abelian_run(std::uint64_t n) {
    std::vector<SimpleFactorId> out;
    for (auto p : prime_factors(n)) out.push_back(abelian_factor(p));
    return out;
}

void append(std::vector<SimpleFactorId>& into, const std::vector<SimpleFactorId>& more) {
    into.insert(into.end(), more.begin(), more.end());
}

std::vector<SimpleFactorId> factors_of(const FiniteGroup& G, TieBreak tie);

std::vector<SimpleFactorId> literal(const FiniteGroup& G, TieBreak tie) {
    const auto normals = normal_subgroups(G, G.order());
    std::vector<const Subgroup*> maximal;
    for (const auto& N : normals) {
        if (N.is_whole()) continue;
        bool covered = false;
        for (const auto& M : normals)
            if (!M.is_whole() && M.order() > N.order() && N.is_subset_of(M)) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(&N);
    }
    const Subgroup& M = tie == TieBreak::First ? *maximal.front() : *maximal.back();
    const std::uint64_t index = G.order() / M.order();
    std::vector<SimpleFactorId> out{is_prime(index) ? abelian_factor(index) : nonabelian_factor(index)};
    append(out, factors_of(M.as_group(), tie));
    return out;
}

std::vector<SimpleFactorId> split(const FiniteGroup& G, TieBreak tie) {
    const Subgroup D = derived_subgroup(G);
    if (!D.is_whole()) {
        auto out = abelian_run(G.order() / D.order());
        append(out, factors_of(D.as_group(), tie));
        return out;
    }
    // Perfect: any proper nontrivial normal subgroup contains the normal closure of an element
    // of prime order. Grow one as far as it stays proper so the quotient is small.
    const auto& cc = G.classes();
    std::vector<std::size_t> cand;
    for (std::size_t c = 0; c < cc.count(); ++c)
        if (is_prime(G.element_order(cc.representatives[c]))) cand.push_back(c);
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return cc.sizes[a] < cc.sizes[b]; });
    if (tie == TieBreak::Last) std::reverse(cand.begin(), cand.end());
    Subgroup N = G.trivial();
    for (std::size_t c : cand) {
        const Index rep = cc.representatives[c];
        if (N.contains(rep)) continue;
        std::vector<Index> seeds(N.generators().begin(), N.generators().end());
        seeds.push_back(rep);
        try {
            N = normal_closure_by(G, seeds, G.generators(), G.order() / 2);
        } catch (const BoundExceeded&) {
        }
    }
    if (N.is_trivial()) return {nonabelian_factor(G.order())};
    auto out = factors_of(N.as_group(), tie);
    append(out, factors_of(quotient(G, N), tie));
    return out;
}

std::vector<SimpleFactorId> factors_of(const FiniteGroup& G, TieBreak tie) {
    const std::uint64_t n = G.order();
    if (n == 1) return {};
    if (is_prime(n) || G.is_abelian()) return abelian_run(n);
    if (n <= kDefaultNormalBound) return literal(G, tie);
    return split(G, tie);
}

} // namespace

std::string SimpleFactorId::name() const {
    if (abelian) return "Z/" + std::to_string(order);
    const auto& names = simple_names();
    if (auto it = names.find(order); it != names.end()) return it->second;
    return "simple#" + std::to_string(order);
}

bool SimpleFactorId::ambiguous() const { return !abelian && name().find('|') != std::string::npos; }

SimpleFactorId abelian_factor(std::uint64_t prime) { return {prime, true}; }
SimpleFactorId nonabelian_factor(std::uint64_t order) { return {order, false}; }

std::vector<SimpleFactorId> composition_factors(const FiniteGroup& G, TieBreak tie, std::size_t bound) {
    if (G.order() > bound) throw BoundExceeded(bound, "composition factors");
    auto out = factors_of(G, tie);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SimpleFactorId> jh_set(std::span<const SimpleFactorId> factors) {
    std::vector<SimpleFactorId> out(factors.begin(), factors.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace weylcheck
