#pragma once

#include "weylcheck/cartan_type.hpp"
#include "weylcheck/composition.hpp"
#include "weylcheck/finite_group.hpp"
#include "weylcheck/root_system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylcheck {

// Generated by the simple reflections. Throws Unsupported for E7/E8 and BoundExceeded above
// the rank caps (A9, B8/C8/D8).
FiniteGroup weyl_group(CartanType t);

// Delta, Ve and V (B/C), plus A, Ul, Us, Dl, Ds for F4, as subgroups of W.
// D_n with n odd has no Delta: -Id changes an odd number of signs.
std::map<std::string, Subgroup> special_subgroups(CartanType t, const FiniteGroup& W);
std::map<std::string, Subgroup> special_subgroups(CartanType t);

// Decimal |W(t)| from the product formula.
std::string order_formula(CartanType t);

enum class JhKind { Alternating, E, Z3, Z2 };

struct JhTypeTag {
    JhKind kind = JhKind::Z2;
    int degree = 0; // n for the A_n-type

    std::string str() const;
    friend bool operator==(const JhTypeTag&, const JhTypeTag&) = default;
};

// Tag of a JH set: an alternating factor of degree n >= 5, one of the three E-type simple
// groups, else Z/3 when 3 divides, else Z/2.
std::optional<JhTypeTag> classify_jh(const std::vector<SimpleFactorId>& jh);

struct FactRecord {
    CartanType type;
    std::string order;
    JhTypeTag jh_type;
    std::optional<std::vector<SimpleFactorId>> jh_set; // absent when factor orders overflow
    std::optional<std::uint64_t> exponent;
    std::optional<int> derived_length; // absent when not solvable
    std::string provenance;
};

FactRecord static_facts(CartanType t);

} // namespace weylcheck
