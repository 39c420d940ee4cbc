#pragma once

#include <cstdint>
#include <vector>

namespace orbi {

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::int64_t &operator()(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::int64_t operator()(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static IntMat identity(int n);
    IntMat mul(const IntMat &o) const;
    bool operator==(const IntMat &o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// U * A * V = S with U, V unimodular and S diagonal with
// s_1 | s_2 | ... | s_rank, s_i > 0. Uinv and Vinv certify unimodularity:
// U*Uinv = I and V*Vinv = I hold exactly by construction.
struct SmithResult {
    IntMat S, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<std::int64_t> diag; // the s_i, i < rank
};

SmithResult smith_normal_form(IntMat A);

} // namespace orbi
