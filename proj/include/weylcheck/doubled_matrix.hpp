#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weylcheck {

// Square integer matrix stored as twice its real value, so the identity holds 2 on the diagonal.
// Products divide by 2 exactly; an odd entry there is an internal error.
class DoubledMatrix {
public:
    static constexpr int kMaxDim = 8;

    DoubledMatrix() = default;
    DoubledMatrix(int dim, std::vector<int> doubled_row_major);

    static DoubledMatrix identity(int dim);

    int dim() const noexcept { return dim_; }
    int doubled(int row, int col) const { return entries_[static_cast<std::size_t>(row * dim_ + col)]; }
    const std::vector<int>& doubled_entries() const noexcept { return entries_; }

    DoubledMatrix operator*(const DoubledMatrix& rhs) const;
    DoubledMatrix inverse() const;
    std::uint64_t order() const;
    bool is_identity() const;

    // x holds doubled coordinates; so does the result.
    std::vector<int> apply(std::span<const int> x) const;

    std::string to_string() const;

    friend bool operator==(const DoubledMatrix&, const DoubledMatrix&) = default;
    friend auto operator<=>(const DoubledMatrix&, const DoubledMatrix&) = default;

private:
    int dim_ = 0;
    std::vector<int> entries_;
};

} // namespace weylcheck
