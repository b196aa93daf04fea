#include "weylcheck/weyl_group.hpp"

#include "weylcheck/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>

namespace weylcheck {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

cpp_int order_value(CartanType t) {
    const int n = t.rank;
    switch (t.letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (cpp_int(1) << n) * factorial(n);
    case 'D': return (cpp_int(1) << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? cpp_int(51840) : n == 7 ? cpp_int(2903040) : cpp_int(696729600);
    case 'F': return 1152;
    default: return 12;
    }
}

std::optional<std::uint64_t> lcm_upto(int n) {
    std::uint64_t e = 1;
    for (int k = 2; k <= n; ++k) {
        e = std::lcm(e, static_cast<std::uint64_t>(k));
        if (e > (std::uint64_t{1} << 60)) return std::nullopt;
    }
    return e;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Alternating group A_m as a simple factor, when its order fits.
std::optional<SimpleFactorId> alternating(int m) {
    const cpp_int half = factorial(m) / 2;
    if (half > cpp_int(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
    return nonabelian_factor(static_cast<std::uint64_t>(half));
}

// Number of letters permuted by the symmetric quotient.
int letters(CartanType t) { return t.letter == 'A' ? t.rank + 1 : t.rank; }

Subgroup closure_of(const FiniteGroup& W, const std::vector<GroupElement>& elements) {
    std::vector<Index> idx;
    for (const auto& g : elements) idx.push_back(W.index_of(g));
    return closure(W, idx);
}

DoubledMatrix diagonal(const std::vector<int>& doubled) {
    const int d = static_cast<int>(doubled.size());
    std::vector<int> e(static_cast<std::size_t>(d * d), 0);
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = doubled[static_cast<std::size_t>(i)];
    return DoubledMatrix(d, std::move(e));
}

} // namespace

FiniteGroup weyl_group(CartanType t) {
    if (t.table_only())
        throw Unsupported("W(" + t.str() + ") has order " + order_formula(t) +
                          ", beyond enumeration; its facts are available from the static table");
    if (!t.enumerable())
        throw BoundExceeded(t.letter == 'A' ? 9 : 8, "rank of " + t.str() + " above the enumeration cap");
    const RootSystem rs = root_system(t);
    std::vector<GroupElement> gens;
    for (const auto& r : rs.simple_roots) gens.push_back(reflection(rs, r));
    const auto hint = static_cast<std::size_t>(order_value(t));
    return generate(gens, kNoBound, "W(" + t.str() + ")", hint);
}

std::map<std::string, Subgroup> special_subgroups(CartanType t, const FiniteGroup& W) {
    std::map<std::string, Subgroup> out;
    const int n = t.rank;
    if (t.letter == 'B' || t.letter == 'C' || t.letter == 'D') {
        if (W.order() != static_cast<std::size_t>(order_value(t)) || W.key_width() != 8)
            throw std::invalid_argument("group is not the signed-permutation W(" + t.str() + ")");
        std::vector<GroupElement> singles, doubles;
        for (int i = 0; i < n; ++i) singles.push_back(SignedPermutation::sign_change(n, 1U << i));
        for (int i = 0; i + 1 < n; ++i) doubles.push_back(SignedPermutation::sign_change(n, 3U << i));
        const GroupElement minus_id = SignedPermutation::sign_change(n, (1U << n) - 1U);
        out.emplace("Ve", doubles.empty() ? W.trivial() : closure_of(W, doubles));
        if (t.letter != 'D') out.emplace("V", closure_of(W, singles));
        if (t.letter != 'D' || n % 2 == 0) out.emplace("Delta", closure_of(W, {minus_id}));
        return out;
    }
    if (t.letter == 'F') {
        if (W.order() != 1152 || W.key_width() != 16) throw std::invalid_argument("group is not W(F4)");
        const RootSystem rs = root_system(t);
        std::vector<GroupElement> long_refl, short_refl;
        for (const auto& r : rs.roots) (rs.norm4(r) == 8 ? long_refl : short_refl).push_back(reflection(rs, r));
        out.emplace("Delta", closure_of(W, {diagonal({-2, -2, -2, -2})}));
        out.emplace("Ve", closure_of(W, {diagonal({-2, -2, 2, 2}), diagonal({2, -2, -2, 2}), diagonal({2, 2, -2, -2})}));
        const Subgroup dl = closure_of(W, long_refl);
        const Subgroup ds = closure_of(W, short_refl);
        out.emplace("Dl", dl);
        out.emplace("Ds", ds);
        out.emplace("A", intersect(dl, ds));
        out.emplace("Ul", closure_of(W, {reflection(rs, Root{{-2, 2, 0, 0}}), reflection(rs, Root{{0, -2, 2, 0}})}));
        out.emplace("Us", closure_of(W, {reflection(rs, Root{{1, 1, 1, 1}}), reflection(rs, Root{{0, 0, 0, -2}})}));
        return out;
    }
    throw Unsupported("no special subgroups are defined for " + t.str());
}

std::map<std::string, Subgroup> special_subgroups(CartanType t) { return special_subgroups(t, weyl_group(t)); }

std::string order_formula(CartanType t) { return order_value(t).str(); }

std::string JhTypeTag::str() const {
    switch (kind) {
    case JhKind::Alternating: return "A" + std::to_string(degree) + "-type";
    case JhKind::E: return "E-type";
    case JhKind::Z3: return "Z/3-type";
    default: return "Z/2-type";
    }
}

std::optional<JhTypeTag> classify_jh(const std::vector<SimpleFactorId>& jh) {
    bool three = false;
    std::optional<JhTypeTag> found;
    for (const auto& f : jh) {
        if (f.abelian) {
            three = three || f.order == 3;
            continue;
        }
        if (f.order == 25920 || f.order == 1451520 || f.order == 174182400) {
            found = JhTypeTag{JhKind::E, 0};
            continue;
        }
        bool matched = false;
        for (int m = 5; m <= 20 && !matched; ++m)
            if (auto a = alternating(m); a && a->order == f.order) {
                found = JhTypeTag{JhKind::Alternating, m};
                matched = true;
            }
        if (!matched) return std::nullopt;
    }
    if (found) return found;
    return JhTypeTag{three ? JhKind::Z3 : JhKind::Z2, 0};
}

FactRecord static_facts(CartanType t) {
    if (!CartanType::valid(t.letter, t.rank)) throw std::invalid_argument("invalid Cartan type");
    FactRecord f;
    f.type = t;
    f.order = order_formula(t);
    const int n = t.rank;
    const auto z2 = abelian_factor(2), z3 = abelian_factor(3);

    switch (t.letter) {
    case 'A':
    case 'B':
    case 'C':
    case 'D': {
        const int m = letters(t);
        if (m >= 5) {
            if (auto a = alternating(m)) f.jh_set = std::vector{z2, *a};
            f.jh_type = {JhKind::Alternating, m};
        } else if (m >= 3) {
            f.jh_set = std::vector{z2, z3};
            f.jh_type = {JhKind::Z3, 0};
        } else {
            f.jh_set = std::vector{z2};
            f.jh_type = {JhKind::Z2, 0};
        }
        const auto sym = lcm_upto(m);
        if (sym) {
            if (t.letter == 'A') f.exponent = *sym;
            else if (t.letter == 'D' && power_of_two(n)) f.exponent = *sym;
            else f.exponent = 2 * *sym;
        }
        f.provenance = "product formula; JH set from the alternating quotient; exponent from lcm(1..n) with the sign doubling";
        break;
    }
    case 'E': {
        const std::uint64_t simple = n == 6 ? 25920 : n == 7 ? 1451520 : 174182400;
        f.jh_set = std::vector{z2, nonabelian_factor(simple)};
        f.jh_type = {JhKind::E, 0};
        if (n == 6) f.exponent = 360;
        f.provenance = n == 6 ? "enumerated and checked against computation"
                              : "table only; simple factor order from the Chevalley order formula";
        break;
    }
    case 'F':
        f.jh_set = std::vector{z2, z3};
        f.jh_type = {JhKind::Z3, 0};
        f.exponent = 24;
        f.provenance = "enumerated and checked against computation";
        break;
    default:
        f.jh_set = std::vector{z2, z3};
        f.jh_type = {JhKind::Z3, 0};
        f.exponent = 6;
        f.provenance = "dihedral of order 12";
        break;
    }

    // Derived lengths of the solvable types.
    const CartanType r = isogeny_representative(t);
    if (r == CartanType{'A', 1}) f.derived_length = 1;
    else if (r == CartanType{'A', 2} || r == CartanType{'B', 2} || r == CartanType{'G', 2}) f.derived_length = 2;
    else if (r == CartanType{'A', 3} || ((r.letter == 'B' || r.letter == 'C') && n == 3)) f.derived_length = 3;
    else if (((r.letter == 'B' || r.letter == 'C') && n == 4) || r == CartanType{'D', 4}) f.derived_length = 4;
    else if (r.letter == 'F') f.derived_length = 4;
    return f;
}

} // namespace weylcheck
