#pragma once

#include "weylcheck/finite_group.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcheck {

// Text format, one generator per line after the header:
//   kind signed-perm n=4        then  "+-++ 2 1 3 4"  (signs per position, 1-based images)
//   kind matrix n=4 denom=2     then  16 integers, row-major, each twice the real entry
// Lines starting with '#' are comments.
struct GroupDescription {
    std::string name;
    std::vector<GroupElement> generators;
};

std::string write_group_description(const FiniteGroup& G);
// Throws ParseError on malformed input.
GroupDescription read_group_description(std::istream& in);
// Closure of the listed generators; throws BoundExceeded past bound elements.
FiniteGroup load_group(std::istream& in, std::size_t bound = kNoBound);

} // namespace weylcheck
