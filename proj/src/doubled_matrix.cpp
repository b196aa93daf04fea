#include "weylcheck/doubled_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weylcheck {

namespace {
constexpr std::uint64_t kOrderCap = 100000;
}

DoubledMatrix::DoubledMatrix(int dim, std::vector<int> doubled_row_major)
    : dim_(dim), entries_(std::move(doubled_row_major)) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("matrix dimension out of range");
    if (entries_.size() != static_cast<std::size_t>(dim * dim))
        throw std::invalid_argument("matrix needs dim*dim entries");
}

DoubledMatrix DoubledMatrix::identity(int dim) {
    std::vector<int> e(static_cast<std::size_t>(dim * dim), 0);
    for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i * dim + i)] = 2;
    return DoubledMatrix(dim, std::move(e));
}

DoubledMatrix DoubledMatrix::operator*(const DoubledMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in product");
    std::vector<int> out(entries_.size(), 0);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            int acc = 0;
            for (int k = 0; k < dim_; ++k) acc += doubled(r, k) * rhs.doubled(k, c);
            if (acc % 2 != 0) throw std::logic_error("inexact halving in doubled matrix product");
            out[static_cast<std::size_t>(r * dim_ + c)] = acc / 2;
        }
    return DoubledMatrix(dim_, std::move(out));
}

bool DoubledMatrix::is_identity() const { return *this == identity(dim_); }

std::uint64_t DoubledMatrix::order() const {
    DoubledMatrix p = *this;
    for (std::uint64_t k = 1; k <= kOrderCap; ++k) {
        if (p.is_identity()) return k;
        p = p * *this;
    }
    throw std::domain_error("matrix has no finite order below the cap");
}

DoubledMatrix DoubledMatrix::inverse() const {
    // Finite order, so the inverse is the last power before the identity.
    DoubledMatrix prev = identity(dim_);
    DoubledMatrix p = *this;
    for (std::uint64_t k = 1; k <= kOrderCap; ++k) {
        if (p.is_identity()) return prev;
        prev = p;
        p = p * *this;
    }
    throw std::domain_error("matrix has no finite order below the cap");
}

std::vector<int> DoubledMatrix::apply(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("vector length mismatch");
    std::vector<int> y(x.size(), 0);
    for (int r = 0; r < dim_; ++r) {
        int acc = 0;
        for (int c = 0; c < dim_; ++c) acc += doubled(r, c) * x[static_cast<std::size_t>(c)];
        if (acc % 2 != 0) throw std::logic_error("inexact halving in matrix action");
        y[static_cast<std::size_t>(r)] = acc / 2;
    }
    return y;
}

std::string DoubledMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? " " : "") << entries_[i];
    return out.str();
}

} // namespace weylcheck
