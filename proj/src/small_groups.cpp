#include "weylcheck/small_groups.hpp"

#include "weylcheck/errors.hpp"
#include "weylcheck/weyl_group.hpp"

#include <algorithm>
#include <numeric>

namespace weylcheck {

namespace {

SignedPermutation images(std::vector<int> to, std::vector<int> negated = {}) { return SignedPermutation(to, negated); }

SignedPermutation full_cycle(int n) {
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    return SignedPermutation::cycle(n, pts);
}

// The number after a prefix, or -1.
int suffix_number(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return -1;
    const std::string digits = name.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 3)
        return -1;
    return std::stoi(digits);
}

} // namespace

FiniteGroup small_group(const std::string& name) {
    std::vector<GroupElement> gens;
    if (name.rfind("W(", 0) == 0 && name.back() == ')') {
        return weyl_group(CartanType::parse(name.substr(2, name.size() - 3)));
    } else if (name == "Klein4") {
        gens = {images({1, 0, 3, 2}), images({2, 3, 0, 1})};
    } else if (name == "Quat8") {
        // Left multiplication by i and j on the quaternions, basis 1, i, j, k.
        gens = {images({1, 0, 3, 2}, {0, 2}), images({2, 3, 0, 1}, {0, 3})};
    } else if (const int n = suffix_number(name, "Cyc"); n >= 1 && n <= 12) {
        gens = {n == 1 ? SignedPermutation(1) : full_cycle(n)};
    } else if (const int n = suffix_number(name, "Sym"); n >= 2 && n <= 7) {
        gens = {SignedPermutation::transposition(n, 0, 1), full_cycle(n)};
    } else if (const int n = suffix_number(name, "Alt"); n >= 3 && n <= 7) {
        for (int i = 2; i < n; ++i) {
            const int pts[] = {0, 1, i};
            gens.emplace_back(SignedPermutation::cycle(n, pts));
        }
    } else if (const int m = suffix_number(name, "Dih"); m >= 6 && m <= 24 && m % 2 == 0) {
        const int n = m / 2;
        std::vector<int> flip(n);
        for (int i = 0; i < n; ++i) flip[i] = (n - i) % n;
        gens = {full_cycle(n), images(flip)};
    } else {
        throw ParseError("unknown group name '" + name + "'");
    }
    return generate(gens, kNoBound, name);
}

std::vector<std::string> small_group_names() {
    std::vector<std::string> out = {"Klein4", "Quat8"};
    for (int n = 1; n <= 12; ++n) out.push_back("Cyc" + std::to_string(n));
    for (int n = 2; n <= 7; ++n) out.push_back("Sym" + std::to_string(n));
    for (int n = 3; n <= 7; ++n) out.push_back("Alt" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) out.push_back("Dih" + std::to_string(2 * n));
    std::vector<std::pair<std::size_t, std::string>> keyed;
    for (auto& s : out) keyed.emplace_back(small_group(s).order(), s);
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [o, s] : keyed) out.push_back(s);
    return out;
}

} // namespace weylcheck
