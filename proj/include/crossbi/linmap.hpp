#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossbi/error.hpp"
#include "crossbi/scalar.hpp"

namespace crossbi {

using Vec = std::vector<Scalar>;

// Ordered list of tensor-leg dimensions. Empty means the ground field.
// Basis index of (i_1, ..., i_k) is mixed radix with the leftmost leg most
// significant.
struct Shape {
    std::vector<std::size_t> factors;

    Shape() = default;
    Shape(std::initializer_list<std::size_t> f) : factors(f) {}
    explicit Shape(std::vector<std::size_t> f) : factors(std::move(f)) {}

    std::size_t rank() const { return factors.size(); }
    std::size_t total() const;
    std::size_t operator[](std::size_t i) const { return factors[i]; }

    std::size_t flat_index(std::span<const std::size_t> legs) const;
    std::vector<std::size_t> legs(std::size_t flat) const;

    Shape concat(const Shape &other) const;
    Shape slice(std::size_t first, std::size_t count) const;
    // Product of factors in [first, first + count).
    std::size_t span_total(std::size_t first, std::size_t count) const;

    std::string to_string() const;
    friend bool operator==(const Shape &, const Shape &) = default;
};

// Dense matrix of a linear map, rows indexed by the codomain basis.
class LinMap {
  public:
    LinMap() = default;
    // Zero map.
    LinMap(FieldSpec field, Shape domain, Shape codomain);
    // Entries row-major, codomain.total() rows by domain.total() columns.
    LinMap(FieldSpec field, Shape domain, Shape codomain, Vec entries);

    static LinMap identity(FieldSpec field, Shape shape);
    // The map k -> V sending 1 to v (shape [] -> s).
    static LinMap from_element(FieldSpec field, Shape shape, std::span<const Scalar> v);
    // The functional V -> k with the given coefficients (shape s -> []).
    static LinMap from_functional(FieldSpec field, Shape shape, std::span<const Scalar> f);

    const FieldSpec &field() const { return field_; }
    const Shape &domain() const { return domain_; }
    const Shape &codomain() const { return codomain_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar &operator()(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    Scalar &at(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }
    const Vec &entries() const { return entries_; }

    Vec column(std::size_t col) const;
    Vec row(std::size_t r) const;
    Vec apply(std::span<const Scalar> v) const;

    LinMap transpose() const;
    // Same entries, new leg structure with the same totals.
    LinMap reshaped(Shape domain, Shape codomain) const;
    bool is_zero() const;

    friend bool operator==(const LinMap &a, const LinMap &b);

  private:
    FieldSpec field_;
    Shape domain_;
    Shape codomain_;
    std::size_t rows_ = 1;
    std::size_t cols_ = 1;
    Vec entries_;
};

// f o g. Throws ShapeMismatch / FieldMismatch.
LinMap compose(const LinMap &f, const LinMap &g);
// Chain compose(fs[0], compose(fs[1], ...)).
LinMap compose(std::initializer_list<std::reference_wrapper<const LinMap>> fs);
// Kronecker product, f's legs first.
LinMap tensor(const LinMap &f, const LinMap &g);
LinMap tensor(std::initializer_list<std::reference_wrapper<const LinMap>> fs);
// The flip [m, n] -> [n, m].
LinMap swap(FieldSpec field, std::size_t m, std::size_t n);
// (id (x) f (x) id) o g, with f acting on codomain legs [first, first + f.domain().rank()).
LinMap on_legs(const LinMap &g, std::size_t first, const LinMap &f);
// Reorders the codomain legs of g: new leg i is old leg perm[i].
LinMap permute_legs(const LinMap &g, std::span<const std::size_t> perm);
LinMap permute_legs(const LinMap &g, std::initializer_list<std::size_t> perm);
// Reverses the leg order of both domain and codomain.
LinMap reflect(const LinMap &f);
// Entrywise sum and scalar multiple of same-shaped maps.
LinMap add(const LinMap &f, const LinMap &g);
LinMap scale(const Scalar &s, const LinMap &f);

void require_same_field(const FieldSpec &a, const FieldSpec &b, const char *what);

} // namespace crossbi
