#pragma once

#include "weylcheck/finite_group.hpp"

#include <string>
#include <vector>

namespace weylcheck {

// Named permutation groups for tests and the CLI: Cyc<n> (n <= 12), Sym<n> and Alt<n> (n <= 7),
// Dih<2n> (3 <= n <= 12), Klein4, Quat8, and W(<type>) for any enumerable Cartan type.
// Throws ParseError on an unknown name.
FiniteGroup small_group(const std::string& name);

// Names accepted above, excluding the Weyl groups, smallest order first.
std::vector<std::string> small_group_names();

} // namespace weylcheck
