#include "rls/tuple.hpp"

#include "rls/errors.hpp"
#include "rls/linalg.hpp"

namespace rls {

namespace {

void require_same_labels(const MonodromyTuple& t, const MonodromyTuple& u) {
    if (t.labels() != u.labels()) throw Error(ErrorCode::LabelMismatch, "tuples are attached to different punctures");
}

}  // namespace

MonodromyTuple::MonodromyTuple(std::vector<std::string> labels, std::vector<Matrix> matrices)
    : labels_(std::move(labels)), matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw Error(ErrorCode::ShapeMismatch, "a tuple needs at least one slot");
    if (labels_.size() != matrices_.size()) {
        throw Error(ErrorCode::LabelMismatch, "label count differs from slot count");
    }
    const size_t n = matrices_.front().rows();
    long cond = 1;
    for (const auto& m : matrices_) {
        if (!m.is_square() || m.rows() != n) throw Error(ErrorCode::ShapeMismatch, "tuple matrices differ in size");
        cond = lcm_conductor(cond, m.conductor());
    }
    for (auto& m : matrices_) m = m.lifted(static_cast<int>(cond));
    Matrix product = matrices_.front();
    for (size_t k = 1; k < matrices_.size(); ++k) product = product * matrices_[k];
    if (!product.is_identity()) throw Error(ErrorCode::ProductNotOne, "g_1 ... g_r is not the identity");
}

MonodromyTuple MonodromyTuple::trivial(std::vector<std::string> labels, size_t rank, int conductor) {
    std::vector<Matrix> ms(labels.size(), Matrix::identity(rank, conductor));
    return {std::move(labels), std::move(ms)};
}

MonodromyTuple MonodromyTuple::lifted(int conductor) const {
    MonodromyTuple out = *this;
    for (auto& m : out.matrices_) m = m.lifted(conductor);
    return out;
}

bool operator==(const MonodromyTuple& lhs, const MonodromyTuple& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.matrices_ == rhs.matrices_;
}

MonodromyTuple rank1_from_ramification(std::vector<std::string> labels, const std::vector<Cyclotomic>& values) {
    if (labels.size() != values.size()) throw Error(ErrorCode::LabelMismatch, "label count differs from value count");
    if (values.empty()) throw Error(ErrorCode::ShapeMismatch, "a tuple needs at least one slot");
    Cyclotomic product(1);
    for (const auto& v : values) product *= v;
    if (!product.is_one()) throw Error(ErrorCode::ProductNotOne, "character values do not multiply to 1");
    std::vector<Matrix> ms;
    ms.reserve(values.size());
    for (const auto& v : values) ms.push_back(Matrix(1, 1, std::vector<Cyclotomic>{v}));
    return {std::move(labels), std::move(ms)};
}

MonodromyTuple tensor(const MonodromyTuple& t, const MonodromyTuple& u) {
    require_same_labels(t, u);
    std::vector<Matrix> ms;
    ms.reserve(t.slot_count());
    for (size_t k = 0; k < t.slot_count(); ++k) ms.push_back(kronecker(t[k], u[k]));
    return {t.labels(), std::move(ms)};
}

MonodromyTuple dual(const MonodromyTuple& t) {
    std::vector<Matrix> ms;
    ms.reserve(t.slot_count());
    for (const auto& m : t.matrices()) ms.push_back(inverse(m).transpose());
    return {t.labels(), std::move(ms)};
}

MonodromyTuple scale_twist(const MonodromyTuple& t, const MonodromyTuple& c) {
    require_same_labels(t, c);
    if (c.rank() != 1) throw Error(ErrorCode::NotRankOne, "twisting tuple must have rank one");
    std::vector<Matrix> ms;
    ms.reserve(t.slot_count());
    for (size_t k = 0; k < t.slot_count(); ++k) ms.push_back(c[k](0, 0) * t[k]);
    return {t.labels(), std::move(ms)};
}

MonodromyTuple direct_sum(const MonodromyTuple& t, const MonodromyTuple& u) {
    require_same_labels(t, u);
    const size_t n = t.rank() + u.rank();
    const int cond = static_cast<int>(lcm_conductor(t.conductor(), u.conductor()));
    std::vector<Matrix> ms;
    for (size_t k = 0; k < t.slot_count(); ++k) {
        Matrix m(n, n, cond);
        for (size_t i = 0; i < t.rank(); ++i) {
            for (size_t j = 0; j < t.rank(); ++j) m.set(i, j, t[k](i, j));
        }
        for (size_t i = 0; i < u.rank(); ++i) {
            for (size_t j = 0; j < u.rank(); ++j) m.set(t.rank() + i, t.rank() + j, u[k](i, j));
        }
        ms.push_back(std::move(m));
    }
    return {t.labels(), std::move(ms)};
}

MonodromyTuple conjugate(const MonodromyTuple& t, const Matrix& p) {
    const Matrix p_inv = inverse(p);
    std::vector<Matrix> ms;
    ms.reserve(t.slot_count());
    for (const auto& m : t.matrices()) ms.push_back(p * m * p_inv);
    return {t.labels(), std::move(ms)};
}

size_t nontrivial_finite_slots(const MonodromyTuple& t) {
    size_t count = 0;
    for (size_t k = 0; k + 1 < t.slot_count(); ++k) {
        if (!t[k].is_identity()) ++count;
    }
    return count;
}

}  // namespace rls
