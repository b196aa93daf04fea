#include "weylcheck/root_system.hpp"

#include "weylcheck/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylcheck {

namespace {

std::vector<int> unit(int dim, int i, int value = 2) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = value;
    return v;
}

std::vector<int> diff(int dim, int i, int j) {
    auto v = unit(dim, i);
    v[static_cast<std::size_t>(j)] = -2;
    return v;
}

std::vector<std::vector<int>> identity_gram(int dim) {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return g;
}

std::vector<std::vector<int>> e6_gram() {
    // Nodes 1-3-4-5-6 in a chain with node 2 attached to node 4 (Bourbaki numbering).
    std::vector<std::vector<int>> g(6, std::vector<int>(6, 0));
    for (int i = 0; i < 6; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
    for (auto [a, b] : edges) {
        g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
        g[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
    }
    return g;
}

} // namespace

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

int RootSystem::inner4(const std::vector<int>& x, const std::vector<int>& y) const {
    int acc = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            acc += x[static_cast<std::size_t>(i)] * gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   y[static_cast<std::size_t>(j)];
    return acc;
}

bool RootSystem::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

std::vector<int> RootSystem::reflect(const Root& r, const std::vector<int>& x) const {
    const int rr = norm4(r);
    if (rr == 0) throw std::invalid_argument("reflection in the zero vector");
    const int num = 2 * inner4(x, r.coords);
    if (num % rr != 0) throw std::logic_error("non-integral reflection coefficient");
    const int c = num / rr;
    std::vector<int> y = x;
    for (int i = 0; i < dim; ++i) y[static_cast<std::size_t>(i)] -= c * r.coords[static_cast<std::size_t>(i)];
    return y;
}

RootSystem root_system(CartanType t) {
    if (!CartanType::valid(t.letter, t.rank)) throw std::invalid_argument("invalid Cartan type");
    if (t.table_only()) throw Unsupported(t.str() + " is served from the static facts table only");
    RootSystem rs;
    rs.type = t;
    const int n = t.rank;
    switch (t.letter) {
    case 'A':
        rs.dim = n + 1;
        for (int i = 0; i < n; ++i) rs.simple_roots.push_back({diff(n + 1, i, i + 1)});
        break;
    case 'B':
    case 'C':
    case 'D':
        rs.dim = n;
        for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back({diff(n, i, i + 1)});
        if (t.letter == 'B') rs.simple_roots.push_back({unit(n, n - 1)});
        if (t.letter == 'C') rs.simple_roots.push_back({unit(n, n - 1, 4)});
        if (t.letter == 'D') {
            auto v = unit(n, n - 2);
            v[static_cast<std::size_t>(n - 1)] = 2;
            rs.simple_roots.push_back({v});
        }
        break;
    case 'F':
        rs.realization = Realization::Euclidean;
        rs.dim = 4;
        rs.simple_roots = {{diff(4, 1, 2)}, {diff(4, 2, 3)}, {unit(4, 3)}, {{1, -1, -1, -1}}};
        break;
    case 'G':
        rs.realization = Realization::RootBasis;
        rs.dim = 2;
        rs.gram = {{2, -3}, {-3, 6}};
        rs.simple_roots = {{unit(2, 0)}, {unit(2, 1)}};
        break;
    case 'E':
        rs.realization = Realization::RootBasis;
        rs.dim = 6;
        rs.gram = e6_gram();
        for (int i = 0; i < 6; ++i) rs.simple_roots.push_back({unit(6, i)});
        break;
    }
    if (rs.gram.empty()) rs.gram = identity_gram(rs.dim);

    // All roots: orbit of the simple roots under the simple reflections.
    std::set<Root> seen(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<Root> stack(rs.simple_roots.begin(), rs.simple_roots.end());
    while (!stack.empty()) {
        const Root x = stack.back();
        stack.pop_back();
        for (const auto& s : rs.simple_roots) {
            Root y{rs.reflect(s, x.coords)};
            if (seen.insert(y).second) stack.push_back(std::move(y));
        }
    }
    rs.roots.assign(seen.begin(), seen.end());
    return rs;
}

std::vector<Root> roots(CartanType t) { return root_system(t).roots; }

namespace {

// Images of the doubled basis vectors, column by column.
std::vector<std::vector<int>> reflected_basis(const RootSystem& system, const Root& r) {
    const int d = system.dim;
    if (r.dim() != d) throw std::invalid_argument("root has the wrong dimension");
    std::vector<std::vector<int>> cols;
    for (int k = 0; k < d; ++k) cols.push_back(system.reflect(r, unit(d, k)));
    return cols;
}

} // namespace

DoubledMatrix reflection_matrix(const RootSystem& system, const Root& r) {
    const int d = system.dim;
    const auto cols = reflected_basis(system, r);
    std::vector<int> entries(static_cast<std::size_t>(d * d));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            entries[static_cast<std::size_t>(i * d + k)] = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    return DoubledMatrix(d, std::move(entries));
}

GroupElement reflection(const RootSystem& system, const Root& r) {
    if (system.realization != Realization::SignedPerm) return reflection_matrix(system, r);
    const int d = system.dim;
    const auto cols = reflected_basis(system, r);
    std::vector<int> images(static_cast<std::size_t>(d));
    std::vector<int> negated;
    for (int k = 0; k < d; ++k) {
        int hits = 0;
        for (int i = 0; i < d; ++i) {
            const int v = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (v != 2 && v != -2) throw std::logic_error("reflection is not a signed permutation");
            ++hits;
            images[static_cast<std::size_t>(k)] = i;
            if (v < 0) negated.push_back(i);
        }
        if (hits != 1) throw std::logic_error("reflection is not a signed permutation");
    }
    return SignedPermutation(images, negated);
}

} // namespace weylcheck
