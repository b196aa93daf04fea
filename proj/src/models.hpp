#pragma once

#include "weylcheck/finite_group.hpp"

namespace weylcheck::detail {

class SignedPermModel final : public ElementModel {
public:
    explicit SignedPermModel(int degree) : degree_(degree) {}
    std::size_t key_width() const noexcept override { return 8; }
    void identity(KeySpan out) const override;
    void multiply(KeyView a, KeyView b, KeySpan out) const override;
    void invert(KeyView a, KeySpan out) const override;
    std::uint64_t order(KeyView a) const override;
    std::string describe(KeyView a) const override;
    std::string kind() const override { return "signed-perm n=" + std::to_string(degree_); }
    std::optional<GroupElement> decode(KeyView a) const override;
    bool encode(const GroupElement& g, KeySpan out) const override;
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

// Entries are the doubled values, one signed byte each.
class MatrixModel final : public ElementModel {
public:
    explicit MatrixModel(int dim) : dim_(dim) {}
    std::size_t key_width() const noexcept override { return static_cast<std::size_t>(dim_ * dim_); }
    void identity(KeySpan out) const override;
    void multiply(KeyView a, KeyView b, KeySpan out) const override;
    void invert(KeyView a, KeySpan out) const override;
    std::string describe(KeyView a) const override;
    std::string kind() const override { return "matrix n=" + std::to_string(dim_) + " denom=2"; }
    std::optional<GroupElement> decode(KeyView a) const override;
    bool encode(const GroupElement& g, KeySpan out) const override;
    int dim() const noexcept { return dim_; }

private:
    int dim_;
};

// Pairs of indices into two factor groups, big-endian so byte order is (a, b) order.
class ProductModel final : public ElementModel {
public:
    ProductModel(FiniteGroup a, FiniteGroup b) : a_(std::move(a)), b_(std::move(b)) {}
    std::size_t key_width() const noexcept override { return 8; }
    void identity(KeySpan out) const override;
    void multiply(KeyView x, KeyView y, KeySpan out) const override;
    void invert(KeyView x, KeySpan out) const override;
    std::uint64_t order(KeyView x) const override;
    std::string describe(KeyView x) const override;
    std::string kind() const override { return "product"; }

    const FiniteGroup& first() const noexcept { return a_; }
    const FiniteGroup& second() const noexcept { return b_; }
    static std::pair<Index, Index> split(KeyView x);
    static void join(Index a, Index b, KeySpan out);

private:
    FiniteGroup a_;
    FiniteGroup b_;
};

// Cosets of a normal subgroup, multiplied through representatives.
class QuotientModel final : public ElementModel {
public:
    QuotientModel(FiniteGroup g, std::vector<Index> coset_of, std::vector<Index> reps)
        : g_(std::move(g)), coset_of_(std::move(coset_of)), reps_(std::move(reps)) {}
    std::size_t key_width() const noexcept override { return 4; }
    void identity(KeySpan out) const override;
    void multiply(KeyView x, KeyView y, KeySpan out) const override;
    void invert(KeyView x, KeySpan out) const override;
    std::string describe(KeyView x) const override;
    std::string kind() const override { return "quotient"; }

private:
    FiniteGroup g_;
    std::vector<Index> coset_of_;
    std::vector<Index> reps_;
};

} // namespace weylcheck::detail
