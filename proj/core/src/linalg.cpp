#include "hermitia/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace hermitia {

using i128 = __int128;

static i64 to_i64(i128 x, const char* what) {
    if (x > i128(INT64_MAX) || x < i128(INT64_MIN))
        throw std::overflow_error(what);
    return static_cast<i64>(x);
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::transposed() const {
    IMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IMat operator*(const IMat& a, const IMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix size mismatch");
    IMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            i128 aik = a.at(i, k);
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = to_i64(i128(c.at(i, j)) + aik * b.at(k, j), "matmul overflow");
        }
    return c;
}

i64 det(const IMat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("det: not square");
    const int n = a.rows;
    if (n == 0) return 1;
    std::vector<i128> m(a.v.begin(), a.v.end());
    auto at = [&](int i, int j) -> i128& { return m[std::size_t(i) * n + j]; };
    int sign = 1;
    i128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return to_i64(sign * at(n - 1, n - 1), "det overflow");
}

IMat adjugate(const IMat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("adjugate: not square");
    const int n = a.rows;
    IMat adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = a.at(r, c);
                }
                ++rr;
            }
            i64 cof = det(minor);
            adj.at(i, j) = (i + j) % 2 == 0 ? cof : -cof;
        }
    return adj;
}

Rat::Rat(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

static Rat make_rat128(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 an = n < 0 ? -n : n;
    i128 g = d;
    while (an != 0) { i128 t = g % an; g = an; an = t; }
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num = to_i64(n, "rational overflow");
    r.den = to_i64(d, "rational overflow");
    return r;
}

Rat operator+(Rat a, Rat b) { return make_rat128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den); }
Rat operator-(Rat a, Rat b) { return make_rat128(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den); }
Rat operator-(Rat a) { a.num = -a.num; return a; }
Rat operator*(Rat a, Rat b) { return make_rat128(i128(a.num) * b.num, i128(a.den) * b.den); }
Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return make_rat128(i128(a.num) * b.den, i128(a.den) * b.num);
}
bool operator<(Rat a, Rat b) { return i128(a.num) * b.den < i128(b.num) * a.den; }
bool operator<=(Rat a, Rat b) { return i128(a.num) * b.den <= i128(b.num) * a.den; }

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
i64 rat_floor(Rat a) { return floor_div(a.num, a.den); }
i64 rat_ceil(Rat a) { return -floor_div(-a.num, a.den); }
double rat_double(Rat a) { return double(a.num) / double(a.den); }

SymInfo analyze_symmetric(const IMat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("analyze_symmetric: not square");
    const int n = a.rows;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    std::vector<bool> done(n, false);
    SymInfo info;
    int remaining = n;
    bool psd = true;
    while (remaining > 0) {
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i) {
            if (done[i]) continue;
            if (m[i][i].num < 0) { psd = false; break; }
            if (m[i][i].num > 0) pivot = i;
        }
        if (!psd) break;
        if (pivot < 0) {
            // all remaining diagonal entries vanish; PSD forces zero rows
            for (int i = 0; i < n && psd; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[j] && !m[i][j].is_zero()) { psd = false; break; }
            }
            break;
        }
        Rat p = m[pivot][pivot];
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == pivot || m[i][pivot].is_zero()) continue;
            Rat factor = m[i][pivot] / p;
            for (int j = 0; j < n; ++j) {
                if (done[j]) continue;
                m[i][j] = m[i][j] - factor * m[pivot][j];
            }
        }
        done[pivot] = true;
        --remaining;
        ++info.rank;
    }
    info.psd = psd;
    if (!psd) {
        // rank via plain rational row elimination
        std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] = Rat(a.at(i, j));
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int piv = -1;
            for (int i = rank; i < n; ++i)
                if (!r[i][col].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(r[piv], r[rank]);
            for (int i = rank + 1; i < n; ++i) {
                if (r[i][col].is_zero()) continue;
                Rat f = r[i][col] / r[rank][col];
                for (int j = col; j < n; ++j) r[i][j] = r[i][j] - f * r[rank][j];
            }
            ++rank;
        }
        info.rank = rank;
    }
    info.pd = info.psd && info.rank == n;
    return info;
}

ColEchelon column_echelon(const IMat& a) {
    ColEchelon res;
    res.echelon = a;
    res.U = IMat::identity(a.cols);
    IMat& e = res.echelon;
    IMat& u = res.U;
    auto col_axpy = [&](int dst, int src, i64 q) {
        // col dst -= q * col src
        for (int i = 0; i < e.rows; ++i)
            e.at(i, dst) = to_i64(i128(e.at(i, dst)) - i128(q) * e.at(i, src), "hnf overflow");
        for (int i = 0; i < u.rows; ++i)
            u.at(i, dst) = to_i64(i128(u.at(i, dst)) - i128(q) * u.at(i, src), "hnf overflow");
    };
    auto col_swap = [&](int p, int q) {
        for (int i = 0; i < e.rows; ++i) std::swap(e.at(i, p), e.at(i, q));
        for (int i = 0; i < u.rows; ++i) std::swap(u.at(i, p), u.at(i, q));
    };
    auto col_neg = [&](int p) {
        for (int i = 0; i < e.rows; ++i) e.at(i, p) = -e.at(i, p);
        for (int i = 0; i < u.rows; ++i) u.at(i, p) = -u.at(i, p);
    };
    int c0 = 0;
    for (int row = 0; row < a.rows && c0 < a.cols; ++row) {
        while (true) {
            int p = -1;
            for (int j = c0; j < a.cols; ++j) {
                if (e.at(row, j) == 0) continue;
                if (p < 0 || std::abs(e.at(row, j)) < std::abs(e.at(row, p))) p = j;
            }
            if (p < 0) break;  // no pivot in this row
            bool lone = true;
            for (int j = c0; j < a.cols; ++j) {
                if (j == p || e.at(row, j) == 0) continue;
                lone = false;
                col_axpy(j, p, e.at(row, j) / e.at(row, p));
            }
            if (lone) {
                col_swap(c0, p);
                if (e.at(row, c0) < 0) col_neg(c0);
                // clear this row to the right of the pivot
                for (int j = c0 + 1; j < a.cols; ++j)
                    if (e.at(row, j) != 0) col_axpy(j, c0, e.at(row, j) / e.at(row, c0));
                ++c0;
                break;
            }
        }
    }
    res.rank = c0;
    return res;
}

}  // namespace hermitia
