#pragma once

#include "weylcheck/cartan_type.hpp"
#include "weylcheck/composition.hpp"
#include "weylcheck/verdict.hpp"
#include "weylcheck/weyl_group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace weylcheck {

// e(W(Dn)) = e(Sn) when n is a power of two, otherwise e(W(Bn)) = e(W(Dn)) = 2 e(Sn); also
// replays the order-2^(l+1) elements used to separate the two cases. 3 <= n <= 8.
Verdict verify_exponent_orthogonal(int n);

enum class PermAction { Alternating, Symmetric, Klein };
const char* to_string(PermAction h);

// A subspace of F_2^n in reduced echelon form: one pivot per basis vector, bit i is coordinate i.
using Subspace = std::vector<std::uint16_t>;

// All subspaces of F_2^n stable under the permutation group, including 0 and the whole space.
// Exhaustive over every subspace (n <= 6).
std::vector<Subspace> invariant_subspaces_exhaustive(int n, const std::vector<std::vector<int>>& perm_generators);
// Joins of the cyclic submodules spanned by orbits of single vectors (any n <= 16).
std::vector<Subspace> invariant_subspaces_by_orbits(int n, const std::vector<std::vector<int>>& perm_generators);
std::vector<std::vector<int>> action_generators(int n, PermAction h);
std::string subspace_string(int n, const Subspace& s);

// The proper nonzero subspaces invariant under H are exactly the diagonal and the even-weight
// subspace. 3 <= n <= 10; Klein needs n = 4.
Verdict verify_invariant_subspaces(int n, PermAction h);

// Proper nontrivial normal subgroups of W(Dn) equal {Delta, Ve, Ve.An} (+ Ve.K4 for n = 4) as
// element sets; Delta is dropped for odd n, where -Id is not in W(Dn). 3 <= n <= 6.
Verdict verify_normal_subgroups_D(int n);

// Odd n: W(Bn) is the internal direct product of W(Dn) and Delta. Even n: no pair of
// nontrivial normal subgroups splits W(Bn). Throws BoundExceeded for n = 8.
Verdict verify_product_decomposition(int n, std::size_t bound = 100'000);

// Decides the iso-trivial relation and, when it holds, builds and checks the isomorphism.
Verdict verify_isotrivial_pair(CartanType a, CartanType b);

// Eight checks on A, Ul, Us, Delta and the semidirect structure of W(F4).
Verdict verify_f4_structure();

struct JhTypeReport {
    JhTypeTag tag;
    std::vector<SimpleFactorId> jh_set;
    bool computed = false;   // from composition factors rather than the table
    bool matches_table = true;
};

JhTypeReport jh_type(CartanType t);
Verdict verify_jh_type(CartanType t);

} // namespace weylcheck
