#include "crossbi/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace crossbi {

SparseColumns::SparseColumns(const LinMap &f) : map_(&f) {
    offsets_.reserve(f.cols() + 1);
    offsets_.push_back(0);
    for (std::size_t c = 0; c < f.cols(); ++c) {
        for (std::size_t r = 0; r < f.rows(); ++r)
            if (!f(r, c).is_zero())
                entries_.emplace_back(r, f(r, c));
        offsets_.push_back(entries_.size());
    }
}

void Tensor::normalize(std::vector<Term> &terms) {
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Scalar acc = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first)
            acc += terms[j++].second;
        if (!acc.is_zero())
            terms[out++] = Term(terms[i].first, std::move(acc));
        i = j;
    }
    terms.resize(out);
}

Tensor Tensor::basis(FieldSpec field, Shape shape, std::size_t flat) {
    if (flat >= shape.total())
        throw ShapeMismatch("basis index out of range for " + shape.to_string());
    Tensor t(field, std::move(shape));
    t.terms_.emplace_back(flat, field.one());
    return t;
}

Tensor Tensor::basis(FieldSpec field, Shape shape, std::span<const std::size_t> legs) {
    auto flat = shape.flat_index(legs);
    return basis(field, std::move(shape), flat);
}

Tensor Tensor::from_dense(FieldSpec field, Shape shape, std::span<const Scalar> v) {
    if (v.size() != shape.total())
        throw ShapeMismatch("dense length does not match " + shape.to_string());
    Tensor t(field, std::move(shape));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            t.terms_.emplace_back(i, v[i]);
    return t;
}

Tensor Tensor::from_terms(FieldSpec field, Shape shape, std::vector<Term> terms) {
    Tensor t(field, std::move(shape));
    for (const auto &term : terms)
        if (term.first >= t.shape_.total())
            throw ShapeMismatch("term index out of range for " + t.shape_.to_string());
    normalize(terms);
    t.terms_ = std::move(terms);
    return t;
}

Tensor Tensor::column(const LinMap &f, std::size_t col) {
    Tensor t(f.field(), f.codomain());
    for (std::size_t r = 0; r < f.rows(); ++r)
        if (!f(r, col).is_zero())
            t.terms_.emplace_back(r, f(r, col));
    return t;
}

Vec Tensor::to_dense() const {
    Vec v(shape_.total(), field_.zero());
    for (const auto &[i, c] : terms_)
        v[i] = c;
    return v;
}

Scalar Tensor::coefficient(std::size_t flat) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), flat,
                               [](const Term &t, std::size_t i) { return t.first < i; });
    if (it != terms_.end() && it->first == flat)
        return it->second;
    return field_.zero();
}

Tensor Tensor::apply(const LinMap &f, std::size_t first) const { return apply(SparseColumns(f), first); }

Tensor Tensor::apply(const SparseColumns &sf, std::size_t first) const {
    const LinMap &f = sf.map();
    const auto k = f.domain().rank();
    if (first + k > shape_.rank() || !(shape_.slice(first, k) == f.domain()))
        throw ShapeMismatch("apply: map domain " + f.domain().to_string() + " does not match legs of " +
                            shape_.to_string() + " at " + std::to_string(first));
    const std::size_t tail = shape_.rank() - first - k;
    const std::size_t suffix = shape_.span_total(first + k, tail);
    const std::size_t mid = f.domain().total();
    const std::size_t out_mid = f.codomain().total();
    Tensor out(field_, shape_.slice(0, first).concat(f.codomain()).concat(shape_.slice(first + k, tail)));
    std::vector<Term> terms;
    for (const auto &[idx, c] : terms_) {
        const std::size_t s = idx % suffix;
        const std::size_t m = (idx / suffix) % mid;
        const std::size_t p = idx / (suffix * mid);
        for (const auto &[o, v] : sf.column(m))
            terms.emplace_back((p * out_mid + o) * suffix + s, c * v);
    }
    normalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

Tensor Tensor::permute(std::span<const std::size_t> perm) const {
    if (perm.size() != shape_.rank())
        throw ShapeMismatch("permute: permutation size does not match " + shape_.to_string());
    Shape ns;
    for (auto p : perm) {
        if (p >= perm.size())
            throw ShapeMismatch("permute: not a permutation");
        ns.factors.push_back(shape_[p]);
    }
    Tensor out(field_, ns);
    std::vector<std::size_t> nl(perm.size());
    out.terms_.reserve(terms_.size());
    for (const auto &[idx, c] : terms_) {
        auto legs = shape_.legs(idx);
        for (std::size_t i = 0; i < perm.size(); ++i)
            nl[i] = legs[perm[i]];
        out.terms_.emplace_back(ns.flat_index(nl), c);
    }
    normalize(out.terms_);
    return out;
}

Tensor Tensor::otimes(const Tensor &other) const {
    Tensor out(field_, shape_.concat(other.shape_));
    const std::size_t n = other.shape_.total();
    out.terms_.reserve(terms_.size() * other.terms_.size());
    for (const auto &[i, a] : terms_)
        for (const auto &[j, b] : other.terms_)
            out.terms_.emplace_back(i * n + j, a * b);
    return out;
}

Tensor &Tensor::operator+=(const Tensor &other) {
    if (!(shape_ == other.shape_))
        throw ShapeMismatch("tensor sum: shapes " + shape_.to_string() + " and " + other.shape_.to_string());
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize(terms_);
    return *this;
}

Tensor &Tensor::operator-=(const Tensor &other) { return *this += other.scaled(-field_.one()); }

Tensor Tensor::scaled(const Scalar &s) const {
    Tensor out(field_, shape_);
    if (s.is_zero())
        return out;
    for (const auto &[i, c] : terms_)
        out.terms_.emplace_back(i, c * s);
    return out;
}

std::string Tensor::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool firstterm = true;
    for (const auto &[idx, c] : terms_) {
        if (!firstterm)
            os << " + ";
        firstterm = false;
        if (!c.is_one())
            os << c << '*';
        os << "e(";
        auto legs = shape_.legs(idx);
        for (std::size_t i = 0; i < legs.size(); ++i)
            os << (i ? "," : "") << legs[i];
        os << ')';
    }
    return os.str();
}

} // namespace crossbi
