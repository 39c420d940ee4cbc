#include "orbi/smith.hpp"

#include <cstdlib>
#include <limits>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("SmithOverflow");
    return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("SmithOverflow");
    return r;
}

// row[i] += f * row[j]
void row_addmul(IntMat &M, int i, int j, std::int64_t f) {
    for (int c = 0; c < M.cols; ++c)
        M(i, c) = add_checked(M(i, c), mul_checked(f, M(j, c)));
}

void col_addmul(IntMat &M, int i, int j, std::int64_t f) {
    for (int r = 0; r < M.rows; ++r)
        M(r, i) = add_checked(M(r, i), mul_checked(f, M(r, j)));
}

void row_swap(IntMat &M, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
}

void col_swap(IntMat &M, int i, int j) {
    for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
}

void row_negate(IntMat &M, int i) {
    for (int c = 0; c < M.cols; ++c) M(i, c) = -M(i, c);
}

} // namespace

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMat IntMat::mul(const IntMat &o) const {
    // accumulate in 128 bits: intermediate products of large transform
    // entries may exceed 64 bits even when the result is small
    IntMat r(rows, o.cols);
    std::vector<__int128> acc(o.cols);
    for (int i = 0; i < rows; ++i) {
        std::fill(acc.begin(), acc.end(), __int128(0));
        for (int k = 0; k < cols; ++k) {
            std::int64_t v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                acc[j] += __int128(v) * o(k, j);
        }
        for (int j = 0; j < o.cols; ++j) {
            if (acc[j] > INT64_MAX || acc[j] < INT64_MIN)
                throw DomainError("SmithOverflow");
            r(i, j) = std::int64_t(acc[j]);
        }
    }
    return r;
}

SmithResult smith_normal_form(IntMat A) {
    const int m = A.rows, n = A.cols;
    SmithResult res;
    res.U = IntMat::identity(m);
    res.Uinv = IntMat::identity(m);
    res.V = IntMat::identity(n);
    res.Vinv = IntMat::identity(n);
    IntMat &S = A;

    const int nmin = std::min(m, n);
    auto find_pivot = [&](int s, int &pr, int &pc) -> bool {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        bool found = false;
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j)
                if (S(i, j) != 0 && std::abs(S(i, j)) < best) {
                    best = std::abs(S(i, j));
                    pr = i; pc = j;
                    found = true;
                }
        return found;
    };

    for (int s = 0; s < nmin; ++s) {
        int pr, pc;
        if (!find_pivot(s, pr, pc)) break;
        for (;;) {
            // Move the smallest entry of the trailing block to (s,s).
            find_pivot(s, pr, pc);
            if (pr != s) {
                row_swap(S, s, pr);
                row_swap(res.U, s, pr);
                col_swap(res.Uinv, s, pr);
            }
            if (pc != s) {
                col_swap(S, s, pc);
                col_swap(res.V, s, pc);
                row_swap(res.Vinv, s, pc);
            }
            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (S(i, s) == 0) continue;
                std::int64_t q = S(i, s) / S(s, s);
                if (q != 0) {
                    row_addmul(S, i, s, -q);
                    row_addmul(res.U, i, s, -q);
                    col_addmul(res.Uinv, s, i, q);
                }
                if (S(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (S(s, j) == 0) continue;
                std::int64_t q = S(s, j) / S(s, s);
                if (q != 0) {
                    col_addmul(S, j, s, -q);
                    col_addmul(res.V, j, s, -q);
                    row_addmul(res.Vinv, s, j, q);
                }
                if (S(s, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot is lone; enforce that it divides the trailing block.
            int br = -1, bc = -1;
            for (int i = s + 1; i < m && br < 0; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (S(i, j) % S(s, s) != 0) { br = i; bc = j; break; }
            if (br < 0) break;
            row_addmul(S, s, br, 1);
            row_addmul(res.U, s, br, 1);
            col_addmul(res.Uinv, br, s, -1);
        }
        if (S(s, s) < 0) {
            row_negate(S, s);
            row_negate(res.U, s);
            // inverse of row negation: negate the corresponding column
            for (int r = 0; r < m; ++r) res.Uinv(r, s) = -res.Uinv(r, s);
        }
    }

    res.rank = 0;
    for (int i = 0; i < nmin; ++i)
        if (S(i, i) != 0) {
            res.diag.push_back(S(i, i));
            ++res.rank;
        }
    res.S = std::move(S);
    return res;
}

} // namespace orbi
