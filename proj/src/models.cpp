#include "models.hpp"

#include "key_table.hpp"

#include <numeric>
#include <stdexcept>

namespace weylcheck {

std::uint64_t ElementModel::order(KeyView a) const {
    const std::size_t w = key_width();
    std::array<std::uint8_t, kMaxKeyWidth> id{}, p{}, q{};
    identity({id.data(), w});
    std::copy(a.begin(), a.end(), p.begin());
    for (std::uint64_t k = 1;; ++k) {
        if (std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(w), id.begin())) return k;
        multiply({p.data(), w}, a, {q.data(), w});
        p = q;
        if (k > (std::uint64_t{1} << 32)) throw std::logic_error("element order did not close");
    }
}

std::shared_ptr<const ElementModel> signed_perm_model(int degree) {
    if (degree < 1 || degree > SignedPermutation::kMaxDegree) throw std::invalid_argument("bad degree");
    return std::make_shared<detail::SignedPermModel>(degree);
}

std::shared_ptr<const ElementModel> matrix_model(int dim) {
    if (dim < 1 || dim > DoubledMatrix::kMaxDim) throw std::invalid_argument("bad dimension");
    return std::make_shared<detail::MatrixModel>(dim);
}

std::shared_ptr<const ElementModel> model_for(const GroupElement& sample) {
    if (kind_of(sample) == ElementKind::SignedPerm) return signed_perm_model(degree_of(sample));
    return matrix_model(degree_of(sample));
}

namespace detail {

// --- signed permutations

void SignedPermModel::identity(KeySpan out) const {
    store_be64(out.data(), SignedPermutation::identity_packed(degree_));
}

void SignedPermModel::multiply(KeyView a, KeyView b, KeySpan out) const {
    store_be64(out.data(),
               SignedPermutation::multiply_packed(load_be64(a.data()), load_be64(b.data()), degree_));
}

void SignedPermModel::invert(KeyView a, KeySpan out) const {
    store_be64(out.data(), SignedPermutation::invert_packed(load_be64(a.data()), degree_));
}

std::uint64_t SignedPermModel::order(KeyView a) const {
    return SignedPermutation::order_packed(load_be64(a.data()), degree_);
}

std::string SignedPermModel::describe(KeyView a) const {
    return SignedPermutation::from_packed(load_be64(a.data()), degree_).to_string();
}

std::optional<GroupElement> SignedPermModel::decode(KeyView a) const {
    return SignedPermutation::from_packed(load_be64(a.data()), degree_);
}

bool SignedPermModel::encode(const GroupElement& g, KeySpan out) const {
    auto p = std::get_if<SignedPermutation>(&g);
    if (!p || p->degree() != degree_) return false;
    store_be64(out.data(), p->packed());
    return true;
}

// --- doubled matrices

void MatrixModel::identity(KeySpan out) const {
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i * dim_ + i)] = 2;
}

void MatrixModel::multiply(KeyView a, KeyView b, KeySpan out) const {
    const auto at = [](KeyView k, int i) { return static_cast<int>(static_cast<std::int8_t>(k[static_cast<std::size_t>(i)])); };
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            int acc = 0;
            for (int k = 0; k < dim_; ++k) acc += at(a, r * dim_ + k) * at(b, k * dim_ + c);
            if (acc % 2 != 0) throw std::logic_error("inexact halving in doubled matrix product");
            acc /= 2;
            if (acc < -128 || acc > 127) throw std::logic_error("doubled matrix entry overflow");
            out[static_cast<std::size_t>(r * dim_ + c)] = static_cast<std::uint8_t>(static_cast<std::int8_t>(acc));
        }
}

void MatrixModel::invert(KeyView a, KeySpan out) const {
    const std::size_t w = key_width();
    std::array<std::uint8_t, kMaxKeyWidth> id{}, prev{}, p{}, q{};
    identity({id.data(), w});
    identity({prev.data(), w});
    std::copy(a.begin(), a.end(), p.begin());
    for (std::uint64_t k = 0; k < 100000; ++k) {
        if (std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(w), id.begin())) {
            std::copy(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(w), out.begin());
            return;
        }
        prev = p;
        multiply({p.data(), w}, a, {q.data(), w});
        p = q;
    }
    throw std::domain_error("matrix has no finite order below the cap");
}

std::string MatrixModel::describe(KeyView a) const { return to_string(*decode(a)); }

std::optional<GroupElement> MatrixModel::decode(KeyView a) const {
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = static_cast<std::int8_t>(a[i]);
    return DoubledMatrix(dim_, std::move(e));
}

bool MatrixModel::encode(const GroupElement& g, KeySpan out) const {
    auto m = std::get_if<DoubledMatrix>(&g);
    if (!m || m->dim() != dim_) return false;
    const auto& e = m->doubled_entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < -128 || e[i] > 127) return false;
        out[i] = static_cast<std::uint8_t>(static_cast<std::int8_t>(e[i]));
    }
    return true;
}

// --- direct products

std::pair<Index, Index> ProductModel::split(KeyView x) { return {load_be32(x.data()), load_be32(x.data() + 4)}; }

void ProductModel::join(Index a, Index b, KeySpan out) {
    store_be32(out.data(), a);
    store_be32(out.data() + 4, b);
}

void ProductModel::identity(KeySpan out) const { join(a_.identity(), b_.identity(), out); }

void ProductModel::multiply(KeyView x, KeyView y, KeySpan out) const {
    const auto [xa, xb] = split(x);
    const auto [ya, yb] = split(y);
    join(a_.mul(xa, ya), b_.mul(xb, yb), out);
}

void ProductModel::invert(KeyView x, KeySpan out) const {
    const auto [xa, xb] = split(x);
    join(a_.inv(xa), b_.inv(xb), out);
}

std::uint64_t ProductModel::order(KeyView x) const {
    const auto [xa, xb] = split(x);
    return std::lcm(a_.element_order(xa), b_.element_order(xb));
}

std::string ProductModel::describe(KeyView x) const {
    const auto [xa, xb] = split(x);
    return "(" + a_.describe(xa) + " | " + b_.describe(xb) + ")";
}

// --- quotients

void QuotientModel::identity(KeySpan out) const { store_be32(out.data(), coset_of_[g_.identity()]); }

void QuotientModel::multiply(KeyView x, KeyView y, KeySpan out) const {
    const Index p = g_.mul(reps_[load_be32(x.data())], reps_[load_be32(y.data())]);
    store_be32(out.data(), coset_of_[p]);
}

void QuotientModel::invert(KeyView x, KeySpan out) const {
    store_be32(out.data(), coset_of_[g_.inv(reps_[load_be32(x.data())])]);
}

std::string QuotientModel::describe(KeyView x) const {
    return "[" + g_.describe(reps_[load_be32(x.data())]) + "]";
}

} // namespace detail
} // namespace weylcheck
