#include "weylcheck/weyl_structure.hpp"

#include "weylcheck/errors.hpp"
#include "weylcheck/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace weylcheck {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Json describe_all(const FiniteGroup& G, std::span<const Index> xs) {
    Json out = Json::array();
    for (Index x : xs) out.push_back(G.describe(x));
    return out;
}

Subgroup closure_of(const FiniteGroup& W, const std::vector<GroupElement>& elements) {
    std::vector<Index> idx;
    for (const auto& g : elements) idx.push_back(W.index_of(g));
    return closure(W, idx);
}

SignedPermutation perm(std::vector<int> images) { return SignedPermutation(images, {}); }

// 3-cycles (0 1 i) generate the alternating group.
std::vector<GroupElement> alternating_perms(int n) {
    std::vector<GroupElement> out;
    for (int i = 2; i < n; ++i) {
        const int pts[] = {0, 1, i};
        out.push_back(SignedPermutation::cycle(n, pts));
    }
    return out;
}

std::vector<std::vector<int>> klein_images() { return {{1, 0, 3, 2}, {2, 3, 0, 1}}; }

FiniteGroup cyclic_two() { return generate(std::vector<GroupElement>{SignedPermutation::sign_change(1, 1)}, kNoBound, "Z/2"); }

} // namespace

// --- exponents

Verdict verify_exponent_orthogonal(int n) {
    if (n < 3 || n > 8) throw std::invalid_argument("exponent check needs 3 <= n <= 8");
    Stopwatch clock;
    Verdict v;
    v.claim_id = "exponent-orthogonal";
    v.params = {{"n", n}};

    const FiniteGroup S = weyl_group({'A', n - 1});
    const FiniteGroup B = weyl_group({'B', n});
    const FiniteGroup D = weyl_group({'D', n});
    const std::uint64_t eS = exponent(S), eB = exponent(B), eD = exponent(D);
    const bool pow2 = power_of_two(n);
    bool holds = pow2 ? (eD == eS && eB == 2 * eS) : (eD == 2 * eS && eB == 2 * eS);

    // (eps, sigma) with sigma the cycle (1 .. 2^l) and eps supported on the listed positions.
    Json replay = Json::array();
    auto check = [&](const FiniteGroup& G, int l, std::uint32_t signs, std::uint64_t expected, const char* note) {
        std::vector<int> pts(static_cast<std::size_t>(1) << l);
        std::iota(pts.begin(), pts.end(), 0);
        const SignedPermutation x = SignedPermutation::sign_change(n, signs) * SignedPermutation::cycle(n, pts);
        const bool member = G.find(GroupElement{x}).has_value();
        const std::uint64_t ord = x.order();
        holds = holds && member && ord == expected;
        replay.push_back({{"element", x.to_string()}, {"group", G.name()}, {"in_group", member},
                          {"order", ord}, {"expected", expected}, {"l", l}, {"note", note}});
    };
    const std::uint32_t ends = 1U | (1U << (n - 1));
    if (pow2) {
        const int l = std::countr_zero(static_cast<unsigned>(n));
        check(D, l, ends, std::uint64_t{1} << l, "full cycle, two signs: no doubling in D");
        check(B, l, 1U, std::uint64_t{1} << (l + 1), "full cycle, one sign: doubling in B");
    } else {
        const int l_div = std::countr_zero(static_cast<unsigned>(n));
        const int l_max = std::bit_width(static_cast<unsigned>(n)) - 1;
        check(D, l_div, ends, std::uint64_t{1} << (l_div + 1), "2^l the largest power of two dividing n");
        if (l_max != l_div)
            check(D, l_max, ends, std::uint64_t{1} << (l_max + 1), "2^l the largest power of two below n");
    }

    v.holds = holds;
    v.witness = {{"e_S", eS}, {"e_B", eB}, {"e_D", eD},
                 {"branch", pow2 ? "power of two" : "doubling"}, {"elements", replay}};
    v.elapsed_ms = clock.ms();
    return v;
}

// --- invariant subspaces

const char* to_string(PermAction h) {
    switch (h) {
    case PermAction::Alternating: return "A";
    case PermAction::Symmetric: return "S";
    default: return "K4";
    }
}

namespace {

int pivot(std::uint16_t x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

Subspace span(std::span<const std::uint16_t> vectors) {
    Subspace basis;
    for (std::uint16_t v : vectors) {
        for (std::uint16_t b : basis)
            if ((v >> pivot(b)) & 1U) v ^= b;
        if (!v) continue;
        const int p = pivot(v);
        for (auto& b : basis)
            if ((b >> p) & 1U) b ^= v;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<>());
    }
    return basis;
}

Subspace join_spaces(const Subspace& a, const Subspace& b) {
    std::vector<std::uint16_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    return span(all);
}

std::uint16_t act(const std::vector<int>& p, std::uint16_t x) {
    std::uint16_t y = 0;
    for (int i = 0; x; ++i, x >>= 1)
        if (x & 1U) y |= static_cast<std::uint16_t>(1U << p[static_cast<std::size_t>(i)]);
    return y;
}

bool space_less(const Subspace& a, const Subspace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void check_action(int n, const std::vector<std::vector<int>>& gens) {
    if (n < 1 || n > 16) throw std::invalid_argument("subspace dimension out of range");
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != n) throw std::invalid_argument("permutation of the wrong degree");
}

} // namespace

std::vector<std::vector<int>> action_generators(int n, PermAction h) {
    std::vector<std::vector<int>> gens;
    auto identity = [n] {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return p;
    };
    switch (h) {
    case PermAction::Symmetric: {
        auto t = identity();
        std::swap(t[0], t[1]);
        auto c = identity();
        std::rotate(c.begin(), c.begin() + 1, c.end());
        gens = {t, c};
        break;
    }
    case PermAction::Alternating:
        for (int i = 2; i < n; ++i) {
            auto c = identity();
            c[0] = 1;
            c[1] = i;
            c[static_cast<std::size_t>(i)] = 0;
            gens.push_back(c);
        }
        break;
    case PermAction::Klein:
        if (n != 4) throw std::invalid_argument("the Klein group acts on 4 points");
        gens = klein_images();
        break;
    }
    return gens;
}

std::string subspace_string(int n, const Subspace& s) {
    if (s.empty()) return "0";
    std::string out;
    for (std::uint16_t b : s) {
        if (!out.empty()) out += ',';
        for (int i = 0; i < n; ++i) out += ((b >> i) & 1U) ? '1' : '0';
    }
    return out;
}

std::vector<Subspace> invariant_subspaces_exhaustive(int n, const std::vector<std::vector<int>>& gens) {
    check_action(n, gens);
    if (n > 6) throw BoundExceeded(6, "exhaustive subspace enumeration");
    const unsigned size = 1U << n;
    // A subspace is the membership mask of its 2^n vectors.
    auto translate = [size](std::uint64_t s, unsigned v) {
        std::uint64_t out = s;
        for (unsigned x = 0; x < size; ++x)
            if ((s >> x) & 1U) out |= std::uint64_t{1} << (x ^ v);
        return out;
    };
    std::unordered_set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> queue{1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t s = queue[head];
        for (unsigned v = 1; v < size; ++v) {
            if ((s >> v) & 1U) continue;
            const std::uint64_t t = translate(s, v);
            if (seen.insert(t).second) queue.push_back(t);
        }
    }
    std::vector<Subspace> out;
    for (std::uint64_t s : queue) {
        bool stable = true;
        for (const auto& g : gens) {
            for (unsigned x = 0; x < size && stable; ++x)
                if (((s >> x) & 1U) && !((s >> act(g, static_cast<std::uint16_t>(x))) & 1U)) stable = false;
        }
        if (!stable) continue;
        std::vector<std::uint16_t> members;
        for (unsigned x = 1; x < size; ++x)
            if ((s >> x) & 1U) members.push_back(static_cast<std::uint16_t>(x));
        out.push_back(span(members));
    }
    std::sort(out.begin(), out.end(), space_less);
    return out;
}

std::vector<Subspace> invariant_subspaces_by_orbits(int n, const std::vector<std::vector<int>>& gens) {
    check_action(n, gens);
    const unsigned size = 1U << n;
    std::set<Subspace> found{Subspace{}};
    std::vector<char> seen(size);
    std::vector<std::uint16_t> orbit;
    for (unsigned v = 1; v < size; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        orbit.assign(1, static_cast<std::uint16_t>(v));
        seen[v] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const auto& g : gens) {
                const std::uint16_t w = act(g, orbit[head]);
                if (!seen[w]) {
                    seen[w] = 1;
                    orbit.push_back(w);
                }
            }
        found.insert(span(orbit));
    }
    // Every submodule is a sum of cyclic ones, so closing under pairwise sums is complete.
    std::vector<Subspace> list(found.begin(), found.end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Subspace s = join_spaces(list[i], list[j]);
            if (found.insert(s).second) list.push_back(std::move(s));
        }
    std::vector<Subspace> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), space_less);
    return out;
}

Verdict verify_invariant_subspaces(int n, PermAction h) {
    if (n < 3 || n > 10) throw std::invalid_argument("invariant subspace check needs 3 <= n <= 10");
    Stopwatch clock;
    Verdict v;
    v.claim_id = "invariant-subspaces";
    v.params = {{"n", n}, {"H", std::string(to_string(h)) + (h == PermAction::Klein ? "" : std::to_string(n))}};

    const auto gens = action_generators(n, h);
    const auto by_orbits = invariant_subspaces_by_orbits(n, gens);
    bool agree = true;
    if (n <= 6) agree = invariant_subspaces_exhaustive(n, gens) == by_orbits;

    std::vector<std::uint16_t> even;
    for (int i = 0; i + 1 < n; ++i) even.push_back(static_cast<std::uint16_t>(3U << i));
    const std::uint16_t ones = static_cast<std::uint16_t>((1U << n) - 1U);
    const Subspace delta = span(std::vector<std::uint16_t>{ones});
    const Subspace ve = span(even);

    Json found = Json::array(), unexpected = Json::array(), missing = Json::array();
    std::size_t proper = 0;
    for (const auto& s : by_orbits) {
        if (s.empty() || static_cast<int>(s.size()) == n) continue;
        ++proper;
        found.push_back(subspace_string(n, s));
        if (s != delta && s != ve) unexpected.push_back(subspace_string(n, s));
    }
    for (const auto& s : {delta, ve})
        if (std::find(by_orbits.begin(), by_orbits.end(), s) == by_orbits.end())
            missing.push_back(subspace_string(n, s));

    v.holds = agree && unexpected.empty() && missing.empty();
    v.witness = {{"proper_invariant_subspaces", found},
                 {"count", proper},
                 {"expected", {{"Delta", subspace_string(n, delta)}, {"Ve", subspace_string(n, ve)}}},
                 {"unexpected", unexpected},
                 {"missing", missing},
                 {"strategy", n <= 6 ? "exhaustive and orbit sums" : "orbit sums"},
                 {"strategies_agree", agree}};
    v.elapsed_ms = clock.ms();
    return v;
}

// --- normal subgroups of W(Dn)

Verdict verify_normal_subgroups_D(int n) {
    if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
    if (n > 6) throw BoundExceeded(6, "normal subgroups of W(D" + std::to_string(n) + ")");
    Stopwatch clock;
    Verdict v;
    v.claim_id = "normal-subgroups-d";
    v.params = {{"n", n}};

    const CartanType t{'D', n};
    const FiniteGroup W = weyl_group(t);
    const auto special = special_subgroups(t, W);
    const Subgroup& ve = special.at("Ve");

    std::vector<std::pair<std::string, Subgroup>> expected;
    if (auto it = special.find("Delta"); it != special.end()) expected.emplace_back("Delta", it->second);
    expected.emplace_back("Ve", ve);
    {
        std::vector<GroupElement> gens = alternating_perms(n);
        for (Index g : ve.generators()) gens.push_back(W.element(g));
        expected.emplace_back("Ve.A" + std::to_string(n), closure_of(W, gens));
    }
    if (n == 4) {
        std::vector<GroupElement> gens;
        for (auto& p : klein_images()) gens.push_back(perm(p));
        for (Index g : ve.generators()) gens.push_back(W.element(g));
        expected.emplace_back("Ve.K4", closure_of(W, gens));
    }

    const auto normals = normal_subgroups(W, std::max<std::size_t>(kDefaultNormalBound, W.order()));
    Json found = Json::array(), missing = Json::array();
    bool holds = true;
    std::size_t proper = 0;
    for (const auto& N : normals) {
        if (N.is_trivial() || N.is_whole()) continue;
        ++proper;
        Json entry = {{"order", N.order()}, {"generators", describe_all(W, N.generators())}};
        auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.second == N; });
        if (it != expected.end()) {
            entry["matches"] = it->first;
        } else {
            entry["matches"] = nullptr;
            holds = false;
        }
        found.push_back(entry);
    }
    for (const auto& [name, H] : expected) {
        const bool present = std::any_of(normals.begin(), normals.end(), [&](const Subgroup& N) { return N == H; });
        if (!present) {
            missing.push_back({{"name", name}, {"order", H.order()}, {"normal", is_normal(H)}});
            holds = false;
        }
    }

    v.witness = {{"order", W.order()}, {"proper_nontrivial", found}, {"count", proper}, {"missing", missing}};
    if (n % 2 == 1) {
        // -Id changes an odd number of signs, so it lies neither in W(Dn) nor in Ve.
        const GroupElement minus_id = SignedPermutation::sign_change(n, (1U << n) - 1U);
        const bool in_w = W.find(minus_id).has_value();
        v.witness["minus_identity_in_group"] = in_w;
        v.witness["delta_in_ve"] = in_w && ve.contains(W.index_of(minus_id));
        holds = holds && !in_w;
    }
    if (n == 3) {
        // W(D3) against W(A3) = S4: the normal subgroup orders must agree.
        std::vector<std::size_t> od, oa;
        for (const auto& N : normals) od.push_back(N.order());
        for (const auto& N : normal_subgroups(weyl_group({'A', 3}))) oa.push_back(N.order());
        v.witness["a3_orders_agree"] = od == oa;
        holds = holds && od == oa;
    }
    v.holds = holds;
    v.elapsed_ms = clock.ms();
    return v;
}

// --- product decomposition

Verdict verify_product_decomposition(int n, std::size_t bound) {
    if (n < 3 || n > 8) throw std::invalid_argument("product decomposition check needs 3 <= n <= 8");
    Stopwatch clock;
    Verdict v;
    v.claim_id = "product-decomposition";
    v.params = {{"n", n}};

    const std::size_t order = std::stoull(order_formula({'B', n}));
    if (n % 2 == 0 && order > bound)
        throw BoundExceeded(bound, "normal subgroups of W(B" + std::to_string(n) + ")");
    const FiniteGroup W = weyl_group({'B', n});

    if (n % 2 == 1) {
        const RootSystem rd = root_system({'D', n});
        std::vector<GroupElement> refl;
        for (const auto& r : rd.simple_roots) refl.push_back(reflection(rd, r));
        const Subgroup D = closure_of(W, refl);
        const Subgroup delta = special_subgroups({'B', n}, W).at("Delta");
        bool commute = true;
        for (Index a : D.generators())
            for (Index b : delta.generators()) commute = commute && W.mul(a, b) == W.mul(b, a);
        const std::size_t meet = intersect(D, delta).order();
        const bool generates = join(D, delta).is_whole();
        v.holds = commute && meet == 1 && generates && D.order() * delta.order() == W.order();
        v.witness = {{"mode", "internal direct product"},
                     {"order", W.order()},
                     {"order_D", D.order()},
                     {"order_Delta", delta.order()},
                     {"commute", commute},
                     {"intersection_order", meet},
                     {"generates", generates}};
    } else {
        const auto normals = normal_subgroups(W, bound);
        std::size_t pairs = 0;
        Json splittings = Json::array();
        for (std::size_t i = 0; i < normals.size(); ++i)
            for (std::size_t j = i + 1; j < normals.size(); ++j) {
                const Subgroup &N = normals[i], &M = normals[j];
                if (N.is_trivial() || M.is_trivial() || N.is_whole() || M.is_whole()) continue;
                if (N.order() * M.order() != W.order()) continue;
                ++pairs;
                if (intersect(N, M).order() == 1)
                    splittings.push_back({{"orders", {N.order(), M.order()}},
                                          {"first", describe_all(W, N.generators())},
                                          {"second", describe_all(W, M.generators())}});
            }
        v.holds = splittings.empty();
        v.witness = {{"mode", "exhaustive over normal subgroup pairs"},
                     {"order", W.order()},
                     {"normal_subgroups", normals.size()},
                     {"pairs_with_complementary_orders", pairs},
                     {"splittings", splittings}};
    }
    v.elapsed_ms = clock.ms();
    return v;
}

// --- iso-trivial pairs

namespace {

// x -> (x * (-Id)^s, s) with s the parity of sign changes; target factor W(Dn) or, for n = 3,
// W(A3) through an isomorphism W(D3) -> W(A3).
std::optional<Homomorphism> b_to_d_times_two(CartanType b, CartanType other, Json& w) {
    const int n = b.rank;
    const FiniteGroup WB = weyl_group(b);
    const FiniteGroup WD = weyl_group({'D', n});
    std::optional<Homomorphism> alias;
    FiniteGroup factor = WD;
    if (other.letter == 'A') {
        factor = weyl_group(other);
        alias = is_isomorphic(WD, factor);
        w["d3_to_a3"] = alias.has_value();
        if (!alias) return std::nullopt;
    }
    const FiniteGroup z2 = cyclic_two();
    const Index flip = z2.identity() == 0 ? 1 : 0;
    const FiniteGroup P = direct_product(factor, z2, "W(" + other.str() + ") x Z/2");
    const SignedPermutation minus_id = SignedPermutation::sign_change(n, (1U << n) - 1U);
    std::vector<Index> images;
    Json table = Json::array();
    for (Index g : WB.generators()) {
        const auto x = std::get<SignedPermutation>(WB.element(g));
        const bool odd = x.sign_change_count() % 2 == 1;
        Index d = WD.index_of(odd ? x * minus_id : x);
        if (alias) d = (*alias)(d);
        images.push_back(*product_index(P, d, odd ? flip : z2.identity()));
        table.push_back({{"generator", x.to_string()}, {"image", P.describe(images.back())}});
    }
    w["generator_images"] = table;
    return Homomorphism::extend(WB, P, images);
}

} // namespace

Verdict verify_isotrivial_pair(CartanType a, CartanType b) {
    Stopwatch clock;
    Verdict v;
    v.claim_id = "isotrivial";
    v.params = {{"pair", {a.str(), b.str()}}};
    const bool iso = weyl_isotrivial(a, b);
    const bool isog = isogenous(a, b);
    Json w = {{"isotrivial", iso}, {"isogenous", isog}};

    auto bc = [](CartanType t) { return t.letter == 'B' || t.letter == 'C'; };
    if (bc(b) && !bc(a)) std::swap(a, b);
    if (a.letter == 'A' && b.letter == 'G') std::swap(a, b);
    const CartanType rb = isogeny_representative(b);

    auto record = [&](const std::optional<Homomorphism>& h) {
        w["isomorphism_found"] = h.has_value();
        w["bijective"] = h && h->is_bijective();
        if (h) w["source_order"] = h->source().order();
        return h && h->is_bijective();
    };

    if (bc(a) && bc(b) && a.rank == b.rank && a.rank >= 2) {
        w["relation"] = "W(B" + std::to_string(a.rank) + ") = W(C" + std::to_string(a.rank) + ")";
        const FiniteGroup WA = weyl_group(a), WB = weyl_group(b);
        std::vector<Index> images;
        for (Index g : WA.generators()) images.push_back(WB.index_of(WA.element(g)));
        v.holds = (iso || isog) && record(Homomorphism::extend(WA, WB, images));
    } else if (bc(a) && a.rank >= 3 && rb == CartanType{'D', a.rank}) {
        w["relation"] = "W(" + a.str() + ") = W(" + b.str() + ") x Z/2";
        if (a.rank % 2 == 1) {
            v.holds = iso && record(b_to_d_times_two(a, b, w));
        } else {
            const FiniteGroup P = direct_product(weyl_group(b), cyclic_two());
            const auto h = is_isomorphic(weyl_group(a), P);
            w["isomorphism_found"] = h.has_value();
            v.holds = !iso && !h;
        }
    } else if (bc(a) && a.rank == 3 && rb == CartanType{'A', 3}) {
        w["relation"] = "W(" + a.str() + ") = W(A3) x Z/2";
        v.holds = iso && record(b_to_d_times_two(a, b, w));
    } else if (a.letter == 'G' && b == CartanType{'A', 2}) {
        w["relation"] = "W(G2) = W(A2) x Z/2";
        const FiniteGroup P = direct_product(weyl_group(b), cyclic_two(), "W(A2) x Z/2");
        v.holds = iso && record(is_isomorphic(weyl_group(a), P));
    } else {
        w["relation"] = nullptr;
        v.holds = !iso;
    }
    v.witness = w;
    v.elapsed_ms = clock.ms();
    return v;
}

// --- F4

namespace {

DoubledMatrix permutation_matrix(const std::vector<int>& p) {
    const int d = static_cast<int>(p.size());
    std::vector<int> e(static_cast<std::size_t>(d * d), 0);
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] * d + i)] = 2;
    return DoubledMatrix(d, std::move(e));
}

bool elementwise_commute(const Subgroup& a, const Subgroup& b) {
    const FiniteGroup& G = a.ambient();
    for (Index x : a.elements())
        for (Index y : b.elements())
            if (G.mul(x, y) != G.mul(y, x)) return false;
    return true;
}

} // namespace

Verdict verify_f4_structure() {
    Stopwatch clock;
    Verdict v;
    v.claim_id = "f4-structure";
    v.params = Json::object();
    const CartanType f4{'F', 4};
    const FiniteGroup W = weyl_group(f4);
    const auto sp = special_subgroups(f4, W);
    const Subgroup &A = sp.at("A"), &delta = sp.at("Delta"), &ul = sp.at("Ul"), &us = sp.at("Us");
    const Subgroup &dl = sp.at("Dl"), &ds = sp.at("Ds"), &ve = sp.at("Ve");

    Json checks = Json::array();
    bool all = true;
    auto add = [&](const char* name, bool ok, Json detail) {
        all = all && ok;
        checks.push_back({{"check", name}, {"holds", ok}, {"detail", std::move(detail)}});
    };

    add("order", W.order() == 1152, {{"order", W.order()}});

    add("A_order", A.order() == 32 && A == intersect(dl, ds) && is_normal(dl) && is_normal(ds),
        {{"A", A.order()}, {"Dl", dl.order()}, {"Ds", ds.order()}});

    {
        std::vector<GroupElement> gens;
        for (const auto& p : klein_images()) gens.push_back(permutation_matrix(p));
        for (Index g : ve.generators()) gens.push_back(W.element(g));
        const Subgroup ve_k4 = closure_of(W, gens);
        add("A_is_Ve_K4", ve_k4 == A && ve_k4.is_subset_of(dl) && ve.order() == 8,
            {{"Ve", ve.order()}, {"Ve.K4", ve_k4.order()}, {"inside_Dl", ve_k4.is_subset_of(dl)}});
    }

    {
        const FiniteGroup s3 = weyl_group({'A', 2});
        const bool commute = elementwise_commute(ul, us);
        const bool ul_s3 = is_isomorphic(ul.as_group(), s3).has_value();
        const bool us_s3 = is_isomorphic(us.as_group(), s3).has_value();
        add("Ul_Us", ul.order() == 6 && us.order() == 6 && commute && ul_s3 && us_s3,
            {{"Ul", ul.order()}, {"Us", us.order()}, {"commute", commute}, {"Ul_is_S3", ul_s3}, {"Us_is_S3", us_s3}});
    }

    {
        const Subgroup u = join(ul, us);
        const std::size_t meet = intersect(A, u).order();
        const FiniteGroup s3 = weyl_group({'A', 2});
        const bool quotient_ok = is_isomorphic(quotient(W, A), direct_product(s3, s3)).has_value();
        add("semidirect", is_normal(A) && u.order() == 36 && meet == 1 && A.order() * u.order() == W.order() &&
                              intersect(ul, us).order() == 1 && quotient_ok,
            {{"UlUs", u.order()}, {"A_meet_UlUs", meet}, {"quotient_is_S3xS3", quotient_ok}});
    }

    {
        const Subgroup z = center(W);
        const Subgroup comm = derived_subgroup(A);
        add("center", z == delta && comm == delta && delta.order() == 2,
            {{"center", z.order()}, {"commutator_of_A", comm.order()}, {"Delta", delta.order()}});
    }

    {
        const std::uint64_t e = exponent(W);
        add("exponent", e == 24, {{"exponent", e}});
    }

    {
        // Subgroups of A/Delta stable under conjugation by Ul x Us.
        const auto a_el = A.elements();
        const FiniteGroup Ag = A.as_group("A");
        std::vector<Index> d_in;
        for (Index x : delta.elements()) d_in.push_back(*Ag.find(W.key(x)));
        const QuotientMap q = quotient_map(Ag, closure(Ag, d_in));
        const FiniteGroup& Q = q.group;

        std::set<std::vector<Index>> seen;
        std::vector<Subgroup> queue{Q.trivial()};
        seen.insert(Q.trivial().elements());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Index x = 0; x < Q.order(); ++x) {
                if (queue[head].contains(x)) continue;
                SubgroupBuilder b(queue[head]);
                b.add(x);
                Subgroup s = b.build();
                if (seen.insert(s.elements()).second) queue.push_back(std::move(s));
            }
        }
        std::vector<Index> conjugators(ul.generators().begin(), ul.generators().end());
        conjugators.insert(conjugators.end(), us.generators().begin(), us.generators().end());
        Json stable = Json::array();
        for (const auto& s : queue) {
            bool ok = true;
            for (Index c : s.elements()) {
                const Index in_w = a_el[q.representative[c]];
                for (Index u : conjugators) {
                    const Index y = W.conj(in_w, u);
                    const auto ya = Ag.find(W.key(y));
                    if (!ya || !s.contains(q.image[*ya])) ok = false;
                }
                if (!ok) break;
            }
            if (ok) stable.push_back(s.order());
        }
        const bool elementary = Q.is_abelian() && exponent(Q) == 2;
        add("irreducible", Q.order() == 16 && elementary && stable == Json::array({1, 16}),
            {{"quotient_order", Q.order()}, {"elementary_abelian", elementary},
             {"subgroups", queue.size()}, {"stable_subgroup_orders", stable}});
    }

    v.holds = all;
    v.witness = {{"checks", checks}};
    v.elapsed_ms = clock.ms();
    return v;
}

// --- JH types

JhTypeReport jh_type(CartanType t) {
    const FactRecord facts = static_facts(t);
    JhTypeReport r;
    r.tag = facts.jh_type;
    if (facts.jh_set) r.jh_set = *facts.jh_set;
    if (!t.enumerable()) return r;
    const auto factors = composition_factors(weyl_group(t));
    const auto set = jh_set(factors);
    const auto tag = classify_jh(set);
    r.computed = true;
    r.matches_table = tag && *tag == facts.jh_type && (!facts.jh_set || *facts.jh_set == set);
    if (tag) r.tag = *tag;
    r.jh_set = set;
    return r;
}

Verdict verify_jh_type(CartanType t) {
    Stopwatch clock;
    Verdict v;
    v.claim_id = "jh-type";
    v.params = {{"type", t.str()}};
    const auto r = jh_type(t);
    Json names = Json::array();
    for (const auto& f : r.jh_set) names.push_back(f.name());
    v.holds = r.matches_table;
    v.witness = {{"tag", r.tag.str()}, {"jh_set", names}, {"source", r.computed ? "computed" : "table"},
                 {"table_tag", static_facts(t).jh_type.str()}};
    v.elapsed_ms = clock.ms();
    return v;
}

} // namespace weylcheck
