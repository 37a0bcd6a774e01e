#pragma once

#include <cstdint>
#include <vector>

namespace hermitia {

using i64 = std::int64_t;

/// Dense row-major integer matrix, small sizes only.
struct IMat {
    int rows = 0, cols = 0;
    std::vector<i64> v;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0) {}

    i64& at(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
    i64 at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }

    static IMat identity(int n);
    IMat transposed() const;
    bool operator==(const IMat&) const = default;
};

IMat operator*(const IMat& a, const IMat& b);

/// Exact determinant (fraction-free Bareiss); throws on intermediate overflow.
i64 det(const IMat& a);

/// Adjugate matrix: a * adjugate(a) = det(a) * I.
IMat adjugate(const IMat& a);

/// Exact reduced fraction over i64 with overflow-checked arithmetic.
struct Rat {
    i64 num = 0, den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);

    bool is_zero() const { return num == 0; }
    bool operator==(const Rat&) const = default;
};

Rat operator+(Rat a, Rat b);
Rat operator-(Rat a, Rat b);
Rat operator-(Rat a);
Rat operator*(Rat a, Rat b);
Rat operator/(Rat a, Rat b);
bool operator<(Rat a, Rat b);
bool operator<=(Rat a, Rat b);
i64 floor_div(i64 a, i64 b);
i64 rat_floor(Rat a);
i64 rat_ceil(Rat a);
double rat_double(Rat a);

/// Rank and exact positive-semidefiniteness of a symmetric integer matrix,
/// by rational symmetric elimination (equivalent to the principal-minor test).
struct SymInfo {
    int rank = 0;
    bool psd = false;
    bool pd = false;
};
SymInfo analyze_symmetric(const IMat& a);

/// Column-style Hermite elimination: returns unimodular U with A*U in column
/// echelon form, zero columns last. Columns of U matching the zero columns
/// span the full integer kernel of A (saturated since U is unimodular).
struct ColEchelon {
    IMat echelon;  // A*U
    IMat U;        // unimodular
    int rank = 0;  // nonzero columns of echelon (placed first)
};
ColEchelon column_echelon(const IMat& a);

}  // namespace hermitia
