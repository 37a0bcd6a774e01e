#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermitia/hermitian.hpp"
#include "hermitia/linalg.hpp"

namespace hermitia {

/// Integer-valued quadratic form in n variables, stored as the doubled Gram
/// matrix D = 2A (so D is integral and symmetric with even diagonal, while A
/// itself may have half-integral off-diagonal entries).
class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(IMat doubled_gram);

    static QuadraticForm zero(int n) { return QuadraticForm(IMat(n, n)); }
    static QuadraticForm diagonal(const std::vector<i64>& d);
    /// coeffs: (i, j, c) with i <= j; c is the coefficient of x_i*x_j.
    static QuadraticForm from_coeffs(int n, const std::vector<std::array<i64, 3>>& coeffs);

    int vars() const { return D_.rows; }
    const IMat& doubled_gram() const { return D_; }
    i64 coeff(int i, int j) const;  // coefficient of x_i*x_j, i <= j
    i64 value(std::span<const i64> x) const;

    bool is_diagonal() const;
    bool positive_definite() const;
    bool positive_semidefinite() const;
    int rank() const;
    i64 det_doubled() const;  // det of D = 2A

    bool operator==(const QuadraticForm&) const = default;

private:
    IMat D_;
};

/// Integer change of variables with determinant +-1. Columns are the images
/// of the new basis vectors: (Q o U)(x) = Q(U x).
struct UnimodularMap {
    IMat U;
    explicit UnimodularMap(IMat u);
    static UnimodularMap identity(int n) { return UnimodularMap(IMat::identity(n)); }
};

QuadraticForm apply(const QuadraticForm& q, const IMat& u);
IMat unimodular_inverse(const IMat& u);

/// 2k-variable quadratic form of a Hermitian lattice, over the ordered
/// generators (g_1, w*g_1, g_2, w*g_2, ...).
QuadraticForm trace_form(const HermitianLattice& L);

/// Restriction of a positive-semidefinite form to a complement of its integer
/// kernel. `transform` maps the new coordinates into the old ones, column-wise;
/// the represented value sets agree.
struct ExtractedBasis {
    QuadraticForm form;  // positive definite in rank(Q) variables
    IMat transform;      // n x rank
};
ExtractedBasis extract_basis(const QuadraticForm& q);

struct ReducedForm {
    QuadraticForm form;
    UnimodularMap map;  // q o map == form
};
/// Greedy pair reduction plus signed-permutation minimisation; the result is a
/// stable representative but not a proven canonical form, so deduplication must
/// confirm collisions with is_equivalent.
ReducedForm reduce(const QuadraticForm& q);

/// Coefficient tuple of reduce(q).form, without tracking the transform; cheap
/// enough for high-volume deduplication. Equal keys imply equal reduced forms.
std::vector<i64> reduction_key(const QuadraticForm& q);

/// Witness u with q1 o u == q2, if the forms are integrally equivalent.
std::optional<UnimodularMap> is_equivalent(const QuadraticForm& q1, const QuadraticForm& q2);

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);

enum class MatchVerdict { IdenticalUnderSignedPermutation, Equivalent, Distinct };
MatchVerdict match_form(const QuadraticForm& q, const QuadraticForm& target);
std::string to_string(MatchVerdict v);

/// Polynomial syntax: terms "c*xi^2" and "c*xi*xj" joined by +/-; variables
/// x1..xn, with aliases x,y,z (n <= 3) and w,x,y,z (n = 4). The parser
/// round-trips the printer.
std::string to_string(const QuadraticForm& q);
QuadraticForm parse_form(const std::string& text);

}  // namespace hermitia
