#include "picmod/snf.hpp"

#include <cstdlib>
#include <limits>

#include "picmod/errors.hpp"

namespace picmod {

IntMat IntMat::identity(i64 n) {
    IntMat m(n, n);
    for (i64 i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols != o.rows) throw ShapeError("IntMat::mul: shape mismatch");
    IntMat r(rows, o.cols);
    for (i64 i = 0; i < rows; ++i)
        for (i64 k = 0; k < cols; ++k) {
            const i64 f = at(i, k);
            if (f == 0) continue;
            for (i64 j = 0; j < o.cols; ++j) r.at(i, j) += f * o.at(k, j);
        }
    return r;
}

namespace {

void swap_rows(IntMat& m, i64 a, i64 b) {
    for (i64 j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, i64 a, i64 b) {
    for (i64 i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMat& m, i64 dst, i64 src, i64 f) {  // row dst += f * row src
    for (i64 j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
}

void add_col(IntMat& m, i64 dst, i64 src, i64 f) {
    for (i64 i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

void negate_row(IntMat& m, i64 r) {
    for (i64 j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

// Smallest nonzero absolute value in the trailing submatrix, or rows if none.
std::pair<i64, i64> min_pivot(const IntMat& m, i64 t) {
    i64 best = std::numeric_limits<i64>::max();
    std::pair<i64, i64> at{m.rows, m.cols};
    for (i64 i = t; i < m.rows; ++i)
        for (i64 j = t; j < m.cols; ++j) {
            const i64 v = std::abs(m.at(i, j));
            if (v != 0 && v < best) {
                best = v;
                at = {i, j};
            }
        }
    return at;
}

}  // namespace

SmithForm smith_normal_form(IntMat m) {
    SmithForm f{IntMat(), IntMat::identity(m.rows), IntMat::identity(m.cols)};
    const i64 steps = std::min(m.rows, m.cols);
    for (i64 t = 0; t < steps; ++t) {
        for (;;) {
            auto [pi, pj] = min_pivot(m, t);
            if (pi == m.rows) break;  // trailing block is zero
            if (pi != t) {
                swap_rows(m, t, pi);
                swap_rows(f.u, t, pi);
            }
            if (pj != t) {
                swap_cols(m, t, pj);
                swap_cols(f.v, t, pj);
            }
            bool clean = true;
            for (i64 i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                const i64 q = m.at(i, t) / m.at(t, t);
                add_row(m, i, t, -q);
                add_row(f.u, i, t, -q);
                if (m.at(i, t) != 0) clean = false;
            }
            for (i64 j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                const i64 q = m.at(t, j) / m.at(t, t);
                add_col(m, j, t, -q);
                add_col(f.v, j, t, -q);
                if (m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide the rest of the block; pull a violator in.
            i64 vi = -1, vj = -1;
            for (i64 i = t + 1; i < m.rows && vi < 0; ++i)
                for (i64 j = t + 1; j < m.cols; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        vi = i;
                        vj = j;
                        break;
                    }
            if (vi < 0) break;
            add_col(m, t, vj, 1);
            add_col(f.v, t, vj, 1);
        }
        if (m.at(t, t) < 0) {
            negate_row(m, t);
            negate_row(f.u, t);
        }
    }
    f.s = std::move(m);
    return f;
}

std::optional<std::vector<QZ>> solve_linear_qz(const IntMat& c, const std::vector<QZ>& b) {
    if (static_cast<i64>(b.size()) != c.rows) throw ShapeError("solve_linear_qz: rhs size mismatch");
    const SmithForm f = smith_normal_form(c);
    std::vector<QZ> bp(static_cast<std::size_t>(c.rows));
    for (i64 r = 0; r < c.rows; ++r) {
        QZ acc;
        for (i64 k = 0; k < c.rows; ++k) acc += b[static_cast<std::size_t>(k)].times(f.u.at(r, k));
        bp[static_cast<std::size_t>(r)] = acc;
    }
    const i64 diag = std::min(c.rows, c.cols);
    std::vector<QZ> xp(static_cast<std::size_t>(c.cols));
    for (i64 r = 0; r < c.rows; ++r) {
        const i64 s = r < diag ? f.s.at(r, r) : 0;
        const QZ& rhs = bp[static_cast<std::size_t>(r)];
        if (s == 0) {
            if (!rhs.is_zero()) return std::nullopt;
        } else {
            xp[static_cast<std::size_t>(r)] = QZ(rhs.num(), rhs.den() * s);
        }
    }
    std::vector<QZ> x(static_cast<std::size_t>(c.cols));
    for (i64 i = 0; i < c.cols; ++i) {
        QZ acc;
        for (i64 k = 0; k < c.cols; ++k) acc += xp[static_cast<std::size_t>(k)].times(f.v.at(i, k));
        x[static_cast<std::size_t>(i)] = acc;
    }
    return x;
}

}  // namespace picmod
