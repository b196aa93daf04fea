#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weylcheck {

// An element (eps, sigma) of (Z/2)^n x| S_n acting by e_i -> eps_{sigma(i)} e_{sigma(i)}.
// Products follow (eps1, s1)(eps2, s2) = (eps1 + s1.eps2, s1 s2).
// Packed into one word: 4 bits per image, sign bits from bit 48.
class SignedPermutation {
public:
    static constexpr int kMaxDegree = 12;

    SignedPermutation() = default;
    explicit SignedPermutation(int degree);
    // images are 0-based sigma(i); negated lists the positions j with eps_j = -1.
    SignedPermutation(std::span<const int> images, std::span<const int> negated);

    static SignedPermutation from_packed(std::uint64_t bits, int degree);
    static SignedPermutation transposition(int degree, int i, int j);
    static SignedPermutation sign_change(int degree, std::uint32_t mask);
    static SignedPermutation cycle(int degree, std::span<const int> points);

    int degree() const noexcept { return degree_; }
    std::uint64_t packed() const noexcept { return bits_; }

    int image(int i) const noexcept { return static_cast<int>((bits_ >> (4 * i)) & 0xF); }
    bool negates(int j) const noexcept { return (bits_ >> (kSignShift + j)) & 1U; }
    std::uint32_t sign_mask() const noexcept {
        return static_cast<std::uint32_t>(bits_ >> kSignShift) & ((1U << degree_) - 1U);
    }
    int sign_change_count() const noexcept;
    bool is_pure_sign_change() const noexcept;

    SignedPermutation operator*(const SignedPermutation& rhs) const;
    SignedPermutation inverse() const;
    std::uint64_t order() const;

    // Acts on a coordinate vector (any scale).
    std::vector<int> apply(std::span<const int> x) const;

    // "+-+ 2 1 3": signs per position, then 1-based images.
    std::string to_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

    static constexpr int kSignShift = 48;

    // Raw packed arithmetic shared with the element model.
    static std::uint64_t multiply_packed(std::uint64_t a, std::uint64_t b, int degree) noexcept;
    static std::uint64_t invert_packed(std::uint64_t a, int degree) noexcept;
    static std::uint64_t order_packed(std::uint64_t a, int degree) noexcept;
    static std::uint64_t identity_packed(int degree) noexcept;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t degree_ = 0;
};

} // namespace weylcheck
