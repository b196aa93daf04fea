#include "weylcheck/signed_permutation.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcheck {

namespace {

constexpr std::uint64_t kPermMask = (std::uint64_t{1} << SignedPermutation::kSignShift) - 1;

void check_degree(int degree) {
    if (degree < 0 || degree > SignedPermutation::kMaxDegree)
        throw std::invalid_argument("signed permutation degree out of range: " + std::to_string(degree));
}

} // namespace

std::uint64_t SignedPermutation::identity_packed(int degree) noexcept {
    std::uint64_t bits = 0;
    for (int i = 0; i < degree; ++i) bits |= std::uint64_t(i) << (4 * i);
    return bits;
}

std::uint64_t SignedPermutation::multiply_packed(std::uint64_t a, std::uint64_t b, int degree) noexcept {
    // sigma = a.sigma o b.sigma; the sign of b at i moves to position a.sigma(i).
    std::uint64_t perm = 0;
    std::uint64_t signs = (a >> kSignShift);
    const std::uint64_t bsigns = b >> kSignShift;
    for (int i = 0; i < degree; ++i) {
        const int bi = static_cast<int>((b >> (4 * i)) & 0xF);
        const std::uint64_t abi = (a >> (4 * bi)) & 0xF;
        perm |= abi << (4 * i);
        const int ai = static_cast<int>((a >> (4 * i)) & 0xF);
        signs ^= ((bsigns >> i) & 1U) << ai;
    }
    return perm | (signs << kSignShift);
}

std::uint64_t SignedPermutation::invert_packed(std::uint64_t a, int degree) noexcept {
    // (eps, s)^-1 = (s^-1 . eps, s^-1); the new sign at i is eps_{s(i)}.
    std::uint64_t perm = 0;
    std::uint64_t signs = 0;
    const std::uint64_t asigns = a >> kSignShift;
    for (int i = 0; i < degree; ++i) {
        const int ai = static_cast<int>((a >> (4 * i)) & 0xF);
        perm |= std::uint64_t(i) << (4 * ai);
        signs |= ((asigns >> ai) & 1U) << i;
    }
    return perm | (signs << kSignShift);
}

std::uint64_t SignedPermutation::order_packed(std::uint64_t a, int degree) noexcept {
    std::uint64_t result = 1;
    std::uint32_t seen = 0;
    const std::uint64_t signs = a >> kSignShift;
    for (int start = 0; start < degree; ++start) {
        if (seen & (1U << start)) continue;
        std::uint64_t len = 0;
        unsigned parity = 0;
        int i = start;
        do {
            seen |= 1U << i;
            parity ^= static_cast<unsigned>((signs >> i) & 1U);
            ++len;
            i = static_cast<int>((a >> (4 * i)) & 0xF);
        } while (i != start);
        result = std::lcm(result, parity ? 2 * len : len);
    }
    return result;
}

SignedPermutation::SignedPermutation(int degree) {
    check_degree(degree);
    degree_ = static_cast<std::uint8_t>(degree);
    bits_ = identity_packed(degree);
}

SignedPermutation::SignedPermutation(std::span<const int> images, std::span<const int> negated) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    degree_ = static_cast<std::uint8_t>(n);
    std::uint32_t hit = 0;
    for (int i = 0; i < n; ++i) {
        const int im = images[static_cast<std::size_t>(i)];
        if (im < 0 || im >= n || (hit & (1U << im)))
            throw std::invalid_argument("images do not form a permutation");
        hit |= 1U << im;
        bits_ |= std::uint64_t(im) << (4 * i);
    }
    for (int j : negated) {
        if (j < 0 || j >= n) throw std::invalid_argument("sign position out of range");
        bits_ ^= std::uint64_t{1} << (kSignShift + j);
    }
}

SignedPermutation SignedPermutation::from_packed(std::uint64_t bits, int degree) {
    check_degree(degree);
    SignedPermutation p;
    p.degree_ = static_cast<std::uint8_t>(degree);
    p.bits_ = bits;
    return p;
}

SignedPermutation SignedPermutation::transposition(int degree, int i, int j) {
    SignedPermutation p(degree);
    if (i < 0 || j < 0 || i >= degree || j >= degree) throw std::invalid_argument("transposition out of range");
    p.bits_ &= ~((std::uint64_t{0xF} << (4 * i)) | (std::uint64_t{0xF} << (4 * j)));
    p.bits_ |= (std::uint64_t(j) << (4 * i)) | (std::uint64_t(i) << (4 * j));
    return p;
}

SignedPermutation SignedPermutation::sign_change(int degree, std::uint32_t mask) {
    SignedPermutation p(degree);
    if (degree < 32 && (mask >> degree) != 0) throw std::invalid_argument("sign mask out of range");
    p.bits_ |= std::uint64_t(mask) << kSignShift;
    return p;
}

SignedPermutation SignedPermutation::cycle(int degree, std::span<const int> points) {
    SignedPermutation p(degree);
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t k = 0; k < points.size(); ++k)
        images[static_cast<std::size_t>(points[k])] = points[(k + 1) % points.size()];
    return SignedPermutation(images, {});
}

int SignedPermutation::sign_change_count() const noexcept { return std::popcount(sign_mask()); }

bool SignedPermutation::is_pure_sign_change() const noexcept {
    return (bits_ & kPermMask) == identity_packed(degree_);
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
    if (degree_ != rhs.degree_) throw std::invalid_argument("degree mismatch in product");
    return from_packed(multiply_packed(bits_, rhs.bits_, degree_), degree_);
}

SignedPermutation SignedPermutation::inverse() const {
    return from_packed(invert_packed(bits_, degree_), degree_);
}

std::uint64_t SignedPermutation::order() const { return order_packed(bits_, degree_); }

std::vector<int> SignedPermutation::apply(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != degree_) throw std::invalid_argument("vector length mismatch");
    std::vector<int> y(x.size());
    for (int i = 0; i < degree_; ++i) {
        const int j = image(i);
        y[static_cast<std::size_t>(j)] = negates(j) ? -x[static_cast<std::size_t>(i)] : x[static_cast<std::size_t>(i)];
    }
    return y;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream out;
    for (int j = 0; j < degree_; ++j) out << (negates(j) ? '-' : '+');
    for (int i = 0; i < degree_; ++i) out << ' ' << image(i) + 1;
    return out.str();
}

} // namespace weylcheck
