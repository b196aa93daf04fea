// One PASS/FAIL line per acceptance criterion; exit status 1 when any line fails.

#include "oracles.hpp"

#include "weylcheck/composition.hpp"
#include "weylcheck/homomorphism.hpp"
#include "weylcheck/quotient_obstruction.hpp"
#include "weylcheck/small_groups.hpp"
#include "weylcheck/weyl_group.hpp"
#include "weylcheck/weyl_structure.hpp"

#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace weylcheck;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

struct Result {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

std::vector<CartanType> enumerable_types() {
    std::vector<CartanType> out;
    for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int rank = 1; rank <= 9; ++rank)
            if (CartanType::valid(letter, rank) && CartanType{letter, rank}.enumerable()) out.push_back({letter, rank});
    return out;
}

// Small groups are shared between criteria.
const FiniteGroup& W(const char* t) {
    static std::map<std::string, FiniteGroup> cache;
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, weyl_group(T(t))).first;
    return it->second;
}

void order_checks(Result& r) {
    Stopwatch clock;
    int checked = 0;
    for (auto t : enumerable_types()) {
        const auto order = weyl_group(t).order();
        r.require(std::to_string(order) == order_formula(t), t.str() + " order " + std::to_string(order));
        ++checked;
    }
    r.require(W("F4").order() == 1152, "F4");
    r.require(W("E6").order() == 51840, "E6");
    const double ms = clock.ms();
    r.require(ms < 60'000, "over 60 s");
    r.detail << checked << " types, " << std::fixed << std::setprecision(1) << ms / 1000 << " s";
}

void exponent_table(Result& r) {
    const std::vector<std::pair<const char*, std::uint64_t>> expected = {
        {"A2", 6}, {"G2", 6}, {"A3", 12}, {"B3", 12}, {"C3", 12}, {"D4", 12}, {"B4", 24}, {"F4", 24}};
    for (auto [t, e] : expected) {
        const auto got = exponent(W(t));
        r.require(got == e, std::string(t) + " " + std::to_string(got));
        r.require(oracle::exponent(oracle::table_of(W(t))) == e, std::string(t) + " by powering");
        r.detail << (r.detail.tellp() > 0 ? " " : "") << t << "=" << got;
    }
}

void exponent_orthogonal(Result& r) {
    for (int n = 3; n <= 8; ++n) {
        auto v = verify_exponent_orthogonal(n);
        const bool pow2 = (n & (n - 1)) == 0;
        r.require(v.holds, "n=" + std::to_string(n));
        r.require(v.witness["branch"] == (pow2 ? "power of two" : "doubling"), "branch n=" + std::to_string(n));
        for (auto& e : v.witness["elements"])
            r.require(e["order"] == e["expected"] && e["in_group"] == true, "element " + e["element"].get<std::string>());
        r.detail << (n > 3 ? ", " : "e(D)/e(B) ") << "n=" << n << ": " << v.witness["e_D"].dump() << "/"
                 << v.witness["e_B"].dump();
    }
}

void invariant_subspaces(Result& r) {
    for (int n = 3; n <= 10; ++n)
        for (auto h : {PermAction::Alternating, PermAction::Symmetric}) {
            auto v = verify_invariant_subspaces(n, h);
            r.require(v.holds, std::string(to_string(h)) + std::to_string(n));
            if (n == 10) r.require(v.elapsed_ms < 10'000, "n=10 over 10 s");
        }
    auto k4 = verify_invariant_subspaces(4, PermAction::Klein);
    r.detail << "n=3..10 for A_n and S_n; K4 on n=4 (reported only): " << k4.witness["count"].dump()
             << " proper nonzero invariant subspaces";
}

void normal_subgroups_d(Result& r) {
    Stopwatch clock;
    for (int n = 3; n <= 6; ++n) {
        auto v = verify_normal_subgroups_D(n);
        r.require(v.holds, "n=" + std::to_string(n) + " found " + v.witness["count"].dump());
        if (n == 4) {
            r.require(v.witness["count"] == 4, "W(D4) has " + v.witness["count"].dump() + " proper nontrivial");
            std::vector<int> orders;
            for (auto& e : v.witness["proper_nontrivial"]) orders.push_back(e["order"]);
            r.detail << "W(D4) proper nontrivial normal subgroup orders:";
            for (int o : orders) r.detail << " " << o;
        }
    }
    r.require(clock.ms() < 30'000, "over 30 s");
}

void product_decomposition(Result& r) {
    Stopwatch clock;
    for (int n : {3, 5, 7}) {
        auto v = verify_product_decomposition(n);
        r.require(v.holds && v.witness["mode"] == "internal direct product", "n=" + std::to_string(n));
    }
    r.detail << "W(Bn) = W(Dn) x Delta for n = 3, 5, 7";
    for (int n : {4, 6}) {
        auto v = verify_product_decomposition(n);
        r.require(v.holds && v.witness["splittings"].empty(), "n=" + std::to_string(n));
        r.detail << "; n=" << n << ": " << v.witness["normal_subgroups"].dump() << " normal subgroups, no splitting";
    }
    r.require(clock.ms() < 60'000, "over 60 s");
}

void isotrivial_isomorphisms(Result& r) {
    std::vector<std::pair<CartanType, CartanType>> pairs;
    for (int n = 2; n <= 6; ++n) pairs.push_back({{'B', n}, {'C', n}});
    pairs.push_back({T("B3"), {'D', 3}});
    pairs.push_back({T("B5"), T("D5")});
    pairs.push_back({T("G2"), T("A2")});
    for (auto [a, b] : pairs) {
        auto v = verify_isotrivial_pair(a, b);
        r.require(v.holds && v.witness["bijective"] == true, a.str() + "/" + b.str());
    }
    const FiniteGroup Z2 = small_group("Cyc2");
    r.require(!is_isomorphic(W("B4"), direct_product(W("D4"), Z2)), "W(B4) = W(D4) x Z/2");
    r.detail << pairs.size() << " explicit isomorphisms, W(B4) not W(D4) x Z/2";
}

// Expected JH type by the classification: alternating factor from degree 5, E-type for E6, then
// Z/3 whenever 3 divides the order.
JhTypeTag expected_jh(CartanType t) {
    t = isogeny_representative(t);
    if (t.letter == 'E') return {JhKind::E, 0};
    const int degree = t.letter == 'A' ? t.rank + 1 : t.classical() ? t.rank : 0;
    if (degree >= 5) return {JhKind::Alternating, degree};
    if (t == T("A1") || t == T("B2")) return {JhKind::Z2, 0};
    return {JhKind::Z3, 0};
}

void jh_types(Result& r) {
    int checked = 0;
    for (auto t : enumerable_types()) {
        auto rep = jh_type(t);
        r.require(rep.computed && rep.matches_table, t.str() + " table");
        r.require(rep.tag == expected_jh(t), t.str() + " " + rep.tag.str());
        ++checked;
    }
    auto e6 = jh_set(composition_factors(W("E6")));
    r.require(e6.size() == 2 && e6[0] == abelian_factor(2) && e6[1] == nonabelian_factor(25920), "E6 factors");
    r.detail << checked << " types; JH_s(W(E6)) = {" << e6[0].name() << ", " << e6.back().name() << "}";
}

void f4_suite(Result& r) {
    auto v = verify_f4_structure();
    r.require(v.holds, "verdict");
    r.require(v.witness["checks"].size() == 8, "eight checks");
    for (auto& c : v.witness["checks"]) {
        r.require(c["holds"] == true, c["check"].get<std::string>());
        if (c["check"] == "irreducible")
            r.require(c["detail"]["subgroups"].get<int>() <= 67 && c["detail"]["quotient_order"] == 16, "A/Delta scan");
    }
    auto A = special_subgroups(T("F4"), W("F4")).at("A");
    r.require(A.order() == 32, "|A|");
    r.require(v.elapsed_ms < 10'000, "over 10 s");
    r.detail << "8 checks, |A| = " << A.order();
}

void derived_series_case(Result& r) {
    auto S4 = small_group("Sym4");
    auto s = derived_series(S4, 3);
    r.require(s.size() == 3 && s[0].order() == 12 && s[1].order() == 4 && s[2].is_trivial(), "S4 series");
    r.require(is_isomorphic(s[0].as_group(), small_group("Alt4")).has_value(), "S4' = A4");
    r.require(is_isomorphic(s[1].as_group(), small_group("Klein4")).has_value(), "S4'' = K4");
    auto d = derived_series(W("D4"), 3);
    r.require(!d[2].is_trivial(), "W(D4)^(3) trivial");
    auto rep = decide_pair(T("D4"), T("B3"));
    r.require(rep.outcome == Outcome::Obstructed && rep.rule == Rule::DerivedLength, "decide_pair(D4, B3)");
    r.detail << "|W(D4)^(3)| = " << d[2].order();
}

// Rule the case analysis uses for each unordered pair of the grid.
std::vector<Rule> expected_rules(CartanType a, CartanType b) {
    auto is = [&](const char* x, const char* y) { return (a == T(x) && b == T(y)) || (a == T(y) && b == T(x)); };
    auto z2 = [](CartanType t) { return t == T("A1") || t == T("B2"); };
    if (is("A1", "B2")) return {Rule::DerivedLength, Rule::AbelianKernel};
    if (z2(a) != z2(b)) return {Rule::JH};
    if (is("D4", "A3") || is("D4", "B3")) return {Rule::DerivedLength};
    if (is("F4", "B4")) return {Rule::BruteForce};
    return {Rule::Exponent};
}

void obstruction_matrix(Result& r) {
    Stopwatch clock;
    const std::vector<CartanType> types = {T("A1"), T("A2"), T("A3"), T("B2"), T("B3"),
                                           T("B4"), T("D4"), T("F4"), T("G2")};
    DecideOptions opt;
    opt.corroborate = true;
    auto m = nonquotient_matrix(types, opt);
    int obstructed = 0, flagged = 0, corroborated = 0;
    std::map<std::string, int> by_rule;
    for (auto& c : m.cells) {
        if (c.quotient == c.source) continue;
        if (c.outcome == Outcome::IsoTrivial) {
            ++flagged;
            r.require(weyl_isotrivial(c.quotient, c.source), "flag " + c.quotient.str() + "/" + c.source.str());
            continue;
        }
        const std::string cell = c.quotient.str() + "/" + c.source.str();
        r.require(c.outcome == Outcome::Obstructed, cell + " " + to_string(c.outcome));
        if (c.outcome != Outcome::Obstructed) continue;
        ++obstructed;
        ++by_rule[to_string(*c.rule)];
        bool matched = false;
        for (Rule want : expected_rules(c.quotient, c.source))
            matched |= std::find(c.fired.begin(), c.fired.end(), want) != c.fired.end() ||
                       (want == Rule::BruteForce && c.rule == Rule::BruteForce);
        r.require(matched, cell + " rule " + to_string(*c.rule));
        r.require(!c.search.is_null() && c.search["found"] == false, cell + " surjection found");
        if (!c.search.is_null() && c.search["complete"] == true) ++corroborated;
    }
    const double ms = clock.ms();
    r.require(ms < 600'000, "over 10 min");
    r.detail << obstructed << " obstructed, " << flagged << " iso-trivial, " << corroborated
             << " corroborated exhaustively;";
    for (auto& [rule, n] : by_rule) r.detail << " " << rule << "=" << n;
    r.detail << "; " << std::fixed << std::setprecision(1) << ms / 1000 << " s";
}

void engine_oracles(Result& r) {
    std::mt19937 rng(20240611);
    auto pick = [&](const std::vector<FiniteGroup>& pool) {
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };

    std::vector<FiniteGroup> small;
    for (auto& name : small_group_names())
        if (small_group(name).order() <= 24) small.push_back(small_group(name));

    int goursat_ok = 0;
    for (int i = 0; i < 20; ++i) {
        FiniteGroup A = pick(small), B = pick(small);
        if (A.order() * B.order() > 5000) {
            --i;
            continue;
        }
        std::set<std::vector<std::pair<int, int>>> engine;
        for (auto& c : goursat_subdirect(A, B)) {
            std::vector<std::pair<int, int>> pairs;
            for (Index x = 0; x < c.carrier.order(); ++x) {
                auto co = compositum_coordinates(c, x);
                pairs.emplace_back(static_cast<int>(co[0]), static_cast<int>(co[1]));
            }
            std::sort(pairs.begin(), pairs.end());
            engine.insert(std::move(pairs));
        }
        auto P = direct_product(A, B);
        std::vector<std::pair<int, int>> coord;
        for (Index x = 0; x < P.order(); ++x) {
            auto [a, b] = product_coordinates(P, x);
            coord.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
        auto scan = oracle::subdirect_by_scan(oracle::table_of(P), coord, static_cast<int>(A.order()),
                                              static_cast<int>(B.order()));
        if (engine == scan) ++goursat_ok;
        else r.require(false, "goursat " + A.name() + " x " + B.name());
    }

    std::vector<FiniteGroup> sources;
    for (auto& name : small_group_names())
        if (small_group(name).order() <= 2000) sources.push_back(small_group(name));
    for (auto t : {"B3", "B4", "D4", "F4", "A4", "A5", "G2", "C3"}) sources.push_back(W(t));
    int surj_ok = 0, surj_yes = 0;
    for (int i = 0; i < 20; ++i) {
        FiniteGroup G = pick(sources);
        std::vector<FiniteGroup> targets;
        for (auto& H : small)
            if (H.order() > 1 && G.order() % H.order() == 0) targets.push_back(H);
        if (targets.empty()) {
            --i;
            continue;
        }
        FiniteGroup H = pick(targets);
        const bool expected = oracle::has_quotient(oracle::table_of(G), oracle::table_of(H));
        const bool got = surjection_exists(G, H).has_value();
        surj_yes += expected;
        if (got == expected) ++surj_ok;
        else r.require(false, "surjection " + G.name() + " -> " + H.name());
    }

    std::vector<FiniteGroup> tie_pool = sources;
    for (auto t : {"B5", "D5", "A6", "E6"}) tie_pool.push_back(W(t));
    int tie_ok = 0;
    for (int i = 0; i < 20; ++i) {
        FiniteGroup G = pick(tie_pool);
        auto first = composition_factors(G, TieBreak::First);
        auto last = composition_factors(G, TieBreak::Last);
        std::uint64_t product = 1;
        for (auto& f : first) product *= f.order;
        if (first == last && product == G.order()) ++tie_ok;
        else r.require(false, "tie-break " + G.name());
    }
    r.detail << "goursat " << goursat_ok << "/20, surjection " << surj_ok << "/20 (" << surj_yes
             << " with a quotient), tie-break " << tie_ok << "/20";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria = {
        {"orders", order_checks},
        {"exponent table", exponent_table},
        {"exponent doubling", exponent_orthogonal},
        {"invariant subspaces", invariant_subspaces},
        {"normal subgroups of W(Dn)", normal_subgroups_d},
        {"product decomposition", product_decomposition},
        {"iso-trivial isomorphisms", isotrivial_isomorphisms},
        {"JH types", jh_types},
        {"F4 structure", f4_suite},
        {"derived series", derived_series_case},
        {"obstruction matrix", obstruction_matrix},
        {"engine oracles", engine_oracles},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        Stopwatch clock;
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        failed += !r.pass;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  "
                  << criteria[i].first << ": " << r.detail.str();
        if (!r.failures.empty()) {
            std::cout << " | failed:";
            for (auto& f : r.failures) std::cout << " [" << f << "]";
        }
        std::cout << " (" << std::fixed << std::setprecision(0) << clock.ms() << " ms)" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
