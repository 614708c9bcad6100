#pragma once

#include <optional>
#include <vector>

#include "picmod/group.hpp"
#include "picmod/qz.hpp"

namespace picmod {

// Dense row-major integer matrix, just large enough for the SNF backend.
struct IntMat {
    i64 rows = 0;
    i64 cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(i64 r, i64 c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
    i64& at(i64 r, i64 c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    i64 at(i64 r, i64 c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    static IntMat identity(i64 n);
    IntMat mul(const IntMat& o) const;
};

// u * input * v = s with u, v unimodular and s diagonal, each diagonal
// dividing the next, all non-negative.
struct SmithForm {
    IntMat s, u, v;
};

SmithForm smith_normal_form(IntMat m);

// A solution of C x = b over Q/Z, if any.  Transform b' = u b; the system is
// solvable iff b'_r vanishes wherever the diagonal of s does (Q/Z is
// divisible, so nonzero diagonals always divide out); back-substitute x = v x'.
std::optional<std::vector<QZ>> solve_linear_qz(const IntMat& c, const std::vector<QZ>& b);

}  // namespace picmod
