#include "crossbi/solve.hpp"

namespace crossbi {

namespace {

struct Echelon {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Reduced row echelon form of the augmented matrix [m | extra].
Echelon rref(const LinMap &m, std::span<const Vec> extra_cols) {
    const std::size_t n = m.rows(), cols = m.cols() + extra_cols.size();
    Echelon e;
    e.rows.assign(n, Vec(cols, m.field().zero()));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            e.rows[r][c] = m(r, c);
        for (std::size_t k = 0; k < extra_cols.size(); ++k)
            e.rows[r][m.cols() + k] = extra_cols[k][r];
    }
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols() && prow < n; ++c) {
        std::size_t sel = prow;
        while (sel < n && e.rows[sel][c].is_zero())
            ++sel;
        if (sel == n)
            continue;
        std::swap(e.rows[prow], e.rows[sel]);
        const Scalar inv = e.rows[prow][c].inverse();
        for (auto &x : e.rows[prow])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == prow || e.rows[r][c].is_zero())
                continue;
            const Scalar factor = e.rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!e.rows[prow][k].is_zero())
                    e.rows[r][k] -= factor * e.rows[prow][k];
        }
        e.pivots.push_back(c);
        ++prow;
    }
    return e;
}

} // namespace

SolveResult solve_linear(const LinMap &system, std::span<const Scalar> rhs) {
    if (rhs.size() != system.rows())
        throw ShapeMismatch("solve_linear: rhs length " + std::to_string(rhs.size()) + " does not match " +
                            std::to_string(system.rows()) + " equations");
    for (const auto &s : rhs)
        require_same_field(s.field(), system.field(), "solve_linear");
    const auto &f = system.field();
    const Vec b(rhs.begin(), rhs.end());
    Echelon e = rref(system, std::span<const Vec>(&b, 1));
    const std::size_t n = system.cols(), rk = e.pivots.size();

    SolveResult res;
    for (std::size_t r = rk; r < system.rows(); ++r)
        if (!e.rows[r][n].is_zero())
            return res;

    res.particular.assign(n, f.zero());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rk; ++r) {
        res.particular[e.pivots[r]] = e.rows[r][n];
        is_pivot[e.pivots[r]] = true;
    }
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec])
            continue;
        Vec v(n, f.zero());
        v[freec] = f.one();
        for (std::size_t r = 0; r < rk; ++r)
            v[e.pivots[r]] = -e.rows[r][freec];
        res.nullspace.push_back(std::move(v));
    }
    res.kind = res.nullspace.empty() ? SolveResult::Kind::Unique : SolveResult::Kind::Many;
    return res;
}

std::size_t rank(const LinMap &m) { return rref(m, {}).pivots.size(); }

std::optional<LinMap> inverse(const LinMap &m) {
    if (m.rows() != m.cols())
        throw ShapeMismatch("inverse: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Vec> ident(n, Vec(n, m.field().zero()));
    for (std::size_t i = 0; i < n; ++i)
        ident[i][i] = m.field().one();
    Echelon e = rref(m, ident);
    if (e.pivots.size() != n)
        return std::nullopt;
    LinMap inv(m.field(), m.codomain(), m.domain());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.at(r, c) = e.rows[r][n + c];
    return inv;
}

} // namespace crossbi
