#pragma once

#include "weylcheck/cartan_type.hpp"
#include "weylcheck/group_element.hpp"

#include <compare>
#include <vector>

namespace weylcheck {

// Coordinates are twice the real ones, so e_1 is (2, 0, ...).
struct Root {
    std::vector<int> coords;

    int dim() const noexcept { return static_cast<int>(coords.size()); }
    Root operator-() const;
    friend auto operator<=>(const Root&, const Root&) = default;
};

enum class Realization {
    SignedPerm, // classical types on coordinate vectors (A_n on n+1 coordinates)
    Euclidean,  // F4 in R^4, matrices
    RootBasis,  // G2 and E6 in simple-root coordinates, matrices
};

struct RootSystem {
    CartanType type;
    Realization realization = Realization::SignedPerm;
    int dim = 0;
    std::vector<std::vector<int>> gram; // real inner product of doubled x, y is x^T gram y / 4
    std::vector<Root> simple_roots;
    std::vector<Root> roots;            // sorted

    // 4 (x, y) for doubled coordinates; always an integer.
    int inner4(const std::vector<int>& x, const std::vector<int>& y) const;
    // (r, r) as a fraction num/4.
    int norm4(const Root& r) const { return inner4(r.coords, r.coords); }
    bool contains(const Root& r) const;
    std::vector<int> reflect(const Root& r, const std::vector<int>& x) const;
};

// Throws Unsupported for E7 and E8.
RootSystem root_system(CartanType t);
std::vector<Root> roots(CartanType t);

// s_r as a group element of the system's model; exact, throws on a non-integral result.
GroupElement reflection(const RootSystem& system, const Root& r);
DoubledMatrix reflection_matrix(const RootSystem& system, const Root& r);

} // namespace weylcheck
