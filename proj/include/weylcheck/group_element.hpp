#pragma once

#include "weylcheck/doubled_matrix.hpp"
#include "weylcheck/signed_permutation.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace weylcheck {

using GroupElement = std::variant<SignedPermutation, DoubledMatrix>;

enum class ElementKind { SignedPerm, Matrix };

ElementKind kind_of(const GroupElement& g);
int degree_of(const GroupElement& g); // n for signed perms, dim for matrices
bool composable(const GroupElement& a, const GroupElement& b);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement identity_like(const GroupElement& g);
std::uint64_t element_order(const GroupElement& g);
std::string to_string(const GroupElement& g);

// Converts a signed permutation to its doubled matrix (column i carries the image of e_i).
DoubledMatrix to_matrix(const SignedPermutation& p);

} // namespace weylcheck
