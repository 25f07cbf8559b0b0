#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossbi/linmap.hpp"

namespace crossbi {

// Nonzero entries of each column of a LinMap, for sparse application.
class SparseColumns {
  public:
    using Entry = std::pair<std::size_t, Scalar>;

    explicit SparseColumns(const LinMap &f);

    const LinMap &map() const { return *map_; }
    std::span<const Entry> column(std::size_t col) const {
        return {entries_.data() + offsets_[col], offsets_[col + 1] - offsets_[col]};
    }

  private:
    const LinMap *map_;
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
};

// Sparse element of a tensor product of spaces (one column of a LinMap).
// Terms are sorted by flat index and never zero.
class Tensor {
  public:
    using Term = std::pair<std::size_t, Scalar>;

    Tensor() = default;
    Tensor(FieldSpec field, Shape shape) : field_(field), shape_(std::move(shape)) {}

    static Tensor basis(FieldSpec field, Shape shape, std::size_t flat);
    static Tensor basis(FieldSpec field, Shape shape, std::span<const std::size_t> legs);
    static Tensor from_dense(FieldSpec field, Shape shape, std::span<const Scalar> v);
    static Tensor from_terms(FieldSpec field, Shape shape, std::vector<Term> terms);
    // f(e_col), shaped by f's codomain.
    static Tensor column(const LinMap &f, std::size_t col);

    const FieldSpec &field() const { return field_; }
    const Shape &shape() const { return shape_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Vec to_dense() const;
    Scalar coefficient(std::size_t flat) const;

    // Applies f to legs [first, first + f.domain().rank()).
    Tensor apply(const LinMap &f, std::size_t first) const;
    Tensor apply(const SparseColumns &f, std::size_t first) const;
    // New leg i is old leg perm[i].
    Tensor permute(std::span<const std::size_t> perm) const;
    Tensor permute(std::initializer_list<std::size_t> perm) const {
        return permute(std::span<const std::size_t>(perm.begin(), perm.size()));
    }
    Tensor otimes(const Tensor &other) const;

    Tensor &operator+=(const Tensor &other);
    Tensor &operator-=(const Tensor &other);
    friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
    Tensor scaled(const Scalar &s) const;

    friend bool operator==(const Tensor &a, const Tensor &b) {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }

    // "2*e(0,1) + -1/3*e(1,0)", or "0".
    std::string to_string() const;

  private:
    static void normalize(std::vector<Term> &terms);

    FieldSpec field_;
    Shape shape_;
    std::vector<Term> terms_;
};

} // namespace crossbi
