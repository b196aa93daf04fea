#include "weylcheck/group_element.hpp"

#include <stdexcept>

namespace weylcheck {

ElementKind kind_of(const GroupElement& g) {
    return std::holds_alternative<SignedPermutation>(g) ? ElementKind::SignedPerm : ElementKind::Matrix;
}

int degree_of(const GroupElement& g) {
    return std::visit([](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SignedPermutation>)
            return x.degree();
        else
            return x.dim();
    }, g);
}

bool composable(const GroupElement& a, const GroupElement& b) {
    return kind_of(a) == kind_of(b) && degree_of(a) == degree_of(b);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (!composable(a, b)) throw std::invalid_argument("elements are not composable");
    if (auto p = std::get_if<SignedPermutation>(&a)) return *p * std::get<SignedPermutation>(b);
    return std::get<DoubledMatrix>(a) * std::get<DoubledMatrix>(b);
}

GroupElement inverse(const GroupElement& g) {
    return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, g);
}

GroupElement identity_like(const GroupElement& g) {
    if (kind_of(g) == ElementKind::SignedPerm) return SignedPermutation(degree_of(g));
    return DoubledMatrix::identity(degree_of(g));
}

std::uint64_t element_order(const GroupElement& g) {
    return std::visit([](const auto& x) { return x.order(); }, g);
}

std::string to_string(const GroupElement& g) {
    return std::visit([](const auto& x) { return x.to_string(); }, g);
}

DoubledMatrix to_matrix(const SignedPermutation& p) {
    const int n = p.degree();
    std::vector<int> e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) {
        const int j = p.image(i);
        e[static_cast<std::size_t>(j * n + i)] = p.negates(j) ? -2 : 2;
    }
    return DoubledMatrix(n, std::move(e));
}

} // namespace weylcheck
