#include "crossbi/linmap.hpp"

#include <algorithm>
#include <sstream>

#include "crossbi/kernels.hpp"
#include "crossbi/tensor.hpp"

namespace crossbi {

std::size_t Shape::total() const {
    std::size_t t = 1;
    for (auto f : factors)
        t *= f;
    return t;
}

std::size_t Shape::flat_index(std::span<const std::size_t> legs) const {
    if (legs.size() != factors.size())
        throw ShapeMismatch("leg count " + std::to_string(legs.size()) + " does not match shape " + to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (legs[i] >= factors[i])
            throw ShapeMismatch("leg index out of range for shape " + to_string());
        idx = idx * factors[i] + legs[i];
    }
    return idx;
}

std::vector<std::size_t> Shape::legs(std::size_t flat) const {
    std::vector<std::size_t> out(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        out[i] = flat % factors[i];
        flat /= factors[i];
    }
    return out;
}

Shape Shape::concat(const Shape &other) const {
    Shape s = *this;
    s.factors.insert(s.factors.end(), other.factors.begin(), other.factors.end());
    return s;
}

Shape Shape::slice(std::size_t first, std::size_t count) const {
    if (first + count > factors.size())
        throw ShapeMismatch("slice out of range for shape " + to_string());
    return Shape(std::vector<std::size_t>(factors.begin() + first, factors.begin() + first + count));
}

std::size_t Shape::span_total(std::size_t first, std::size_t count) const {
    std::size_t t = 1;
    for (std::size_t i = first; i < first + count; ++i)
        t *= factors[i];
    return t;
}

std::string Shape::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < factors.size(); ++i)
        os << (i ? "," : "") << factors[i];
    os << ']';
    return os.str();
}

void require_same_field(const FieldSpec &a, const FieldSpec &b, const char *what) {
    if (!(a == b))
        throw FieldMismatch(std::string(what) + ": fields " + a.name() + " and " + b.name() + " differ");
}

LinMap::LinMap(FieldSpec field, Shape domain, Shape codomain)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)) {
    rows_ = codomain_.total();
    cols_ = domain_.total();
    entries_.assign(rows_ * cols_, field_.zero());
}

LinMap::LinMap(FieldSpec field, Shape domain, Shape codomain, Vec entries)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
    rows_ = codomain_.total();
    cols_ = domain_.total();
    if (entries_.size() != rows_ * cols_)
        throw ShapeMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                            codomain_.to_string() + "x" + domain_.to_string());
    for (const auto &e : entries_)
        require_same_field(e.field(), field_, "LinMap entries");
}

LinMap LinMap::identity(FieldSpec field, Shape shape) {
    LinMap m(field, shape, shape);
    for (std::size_t i = 0; i < m.rows_; ++i)
        m.at(i, i) = field.one();
    return m;
}

LinMap LinMap::from_element(FieldSpec field, Shape shape, std::span<const Scalar> v) {
    if (v.size() != shape.total())
        throw ShapeMismatch("element length does not match shape " + shape.to_string());
    return LinMap(field, Shape{}, shape, Vec(v.begin(), v.end()));
}

LinMap LinMap::from_functional(FieldSpec field, Shape shape, std::span<const Scalar> f) {
    if (f.size() != shape.total())
        throw ShapeMismatch("functional length does not match shape " + shape.to_string());
    return LinMap(field, shape, Shape{}, Vec(f.begin(), f.end()));
}

Vec LinMap::column(std::size_t col) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back((*this)(r, col));
    return out;
}

Vec LinMap::row(std::size_t r) const {
    return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec LinMap::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw ShapeMismatch("vector length " + std::to_string(v.size()) + " does not match domain " +
                            domain_.to_string());
    Vec out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, c).is_zero())
                out[r].add_product((*this)(r, c), v[c]);
    }
    return out;
}

LinMap LinMap::transpose() const {
    LinMap t(field_, codomain_, domain_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = (*this)(r, c);
    return t;
}

LinMap LinMap::reshaped(Shape domain, Shape codomain) const {
    if (domain.total() != domain_.total() || codomain.total() != codomain_.total())
        throw ShapeMismatch("reshape changes total dimension");
    return LinMap(field_, std::move(domain), std::move(codomain), entries_);
}

bool LinMap::is_zero() const {
    for (const auto &e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool operator==(const LinMap &a, const LinMap &b) {
    return a.field_ == b.field_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.entries_ == b.entries_;
}

namespace {

#ifdef CROSSBI_HAVE_OPENMP
namespace impl = kernels::parallel;
#else
namespace impl = kernels::serial;
#endif

} // namespace

LinMap compose(const LinMap &f, const LinMap &g) {
    require_same_field(f.field(), g.field(), "compose");
    if (g.codomain().total() != f.domain().total())
        throw ShapeMismatch("compose: codomain " + g.codomain().to_string() + " does not match domain " +
                            f.domain().to_string());
    return LinMap(f.field(), g.domain(), f.codomain(), impl::matmul(f, g));
}

LinMap compose(std::initializer_list<std::reference_wrapper<const LinMap>> fs) {
    if (fs.size() == 0)
        throw ShapeMismatch("compose: empty chain");
    auto it = fs.end();
    LinMap acc = *--it;
    while (it != fs.begin())
        acc = compose(*--it, acc);
    return acc;
}

LinMap tensor(const LinMap &f, const LinMap &g) {
    require_same_field(f.field(), g.field(), "tensor");
    return LinMap(f.field(), f.domain().concat(g.domain()), f.codomain().concat(g.codomain()), impl::kron(f, g));
}

LinMap tensor(std::initializer_list<std::reference_wrapper<const LinMap>> fs) {
    if (fs.size() == 0)
        throw ShapeMismatch("tensor: empty list");
    auto it = fs.begin();
    LinMap acc = *it++;
    for (; it != fs.end(); ++it)
        acc = tensor(acc, *it);
    return acc;
}

LinMap swap(FieldSpec field, std::size_t m, std::size_t n) {
    LinMap s(field, Shape{m, n}, Shape{n, m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.at(j * m + i, i * n + j) = field.one();
    return s;
}

LinMap on_legs(const LinMap &g, std::size_t first, const LinMap &f) {
    require_same_field(f.field(), g.field(), "on_legs");
    const auto k = f.domain().rank();
    const Shape &cod = g.codomain();
    if (first + k > cod.rank() || !(cod.slice(first, k) == f.domain()))
        throw ShapeMismatch("on_legs: map domain " + f.domain().to_string() + " does not match legs of " +
                            cod.to_string() + " at " + std::to_string(first));
    Shape out = cod.slice(0, first).concat(f.codomain()).concat(cod.slice(first + k, cod.rank() - first - k));
    SparseColumns sf(f);
    auto fn = [&](const Tensor &t) { return t.apply(sf, first); };
    return LinMap(g.field(), g.domain(), out, impl::map_columns(g, out.total(), fn));
}

LinMap permute_legs(const LinMap &g, std::span<const std::size_t> perm) {
    const Shape &cod = g.codomain();
    if (perm.size() != cod.rank())
        throw ShapeMismatch("permute_legs: permutation size does not match " + cod.to_string());
    std::vector<bool> seen(perm.size(), false);
    Shape out;
    for (auto p : perm) {
        if (p >= perm.size() || seen[p])
            throw ShapeMismatch("permute_legs: not a permutation");
        seen[p] = true;
        out.factors.push_back(cod[p]);
    }
    LinMap r(g.field(), g.domain(), out);
    std::vector<std::size_t> newlegs(perm.size());
    for (std::size_t row = 0; row < g.rows(); ++row) {
        auto legs = cod.legs(row);
        for (std::size_t i = 0; i < perm.size(); ++i)
            newlegs[i] = legs[perm[i]];
        std::size_t nr = out.flat_index(newlegs);
        for (std::size_t c = 0; c < g.cols(); ++c)
            r.at(nr, c) = g(row, c);
    }
    return r;
}

LinMap permute_legs(const LinMap &g, std::initializer_list<std::size_t> perm) {
    return permute_legs(g, std::span<const std::size_t>(perm.begin(), perm.size()));
}

namespace {

std::vector<std::size_t> reversed_index(const Shape &s, Shape &rev) {
    rev = Shape(std::vector<std::size_t>(s.factors.rbegin(), s.factors.rend()));
    std::vector<std::size_t> map(s.total());
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto legs = s.legs(i);
        std::reverse(legs.begin(), legs.end());
        map[i] = rev.flat_index(legs);
    }
    return map;
}

} // namespace

LinMap reflect(const LinMap &f) {
    Shape rd, rc;
    auto cmap = reversed_index(f.domain(), rd);
    auto rmap = reversed_index(f.codomain(), rc);
    LinMap r(f.field(), rd, rc);
    for (std::size_t row = 0; row < f.rows(); ++row)
        for (std::size_t c = 0; c < f.cols(); ++c)
            r.at(rmap[row], cmap[c]) = f(row, c);
    return r;
}

LinMap add(const LinMap &f, const LinMap &g) {
    require_same_field(f.field(), g.field(), "add");
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw ShapeMismatch("add: shapes differ");
    Vec e = f.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += g.entries()[i];
    return LinMap(f.field(), f.domain(), f.codomain(), std::move(e));
}

LinMap scale(const Scalar &s, const LinMap &f) {
    Vec e = f.entries();
    for (auto &x : e)
        x *= s;
    return LinMap(f.field(), f.domain(), f.codomain(), std::move(e));
}

} // namespace crossbi
