#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitia/linalg.hpp"
#include "hermitia/ring.hpp"

namespace hermitia {

/// Positive-semidefinite integral Hermitian lattice given by a conjugate-symmetric
/// Gram presentation over a (possibly redundant) generating set.
struct HermitianLattice {
    FieldParams field;
    std::vector<std::vector<AlgebraicInteger>> gram;  // k x k, gram[i][j] = H(g_i, g_j)
    std::string label;
    int rank = 0;  // rank over E = rank of the trace Gram / 2

    int generators() const { return static_cast<int>(gram.size()); }
};

/// Validates conjugate symmetry, integer nonnegative diagonal and positive
/// semidefiniteness (via the trace Gram). Throws std::invalid_argument otherwise.
HermitianLattice make_lattice(const FieldParams& field,
                              std::vector<std::vector<AlgebraicInteger>> gram,
                              std::string label = {});

/// Diagonal lattice <d1,...,dk>.
HermitianLattice diagonal_lattice(const FieldParams& field, const std::vector<i64>& diag,
                                  std::string label = {});

/// H(x,x) for x in generator coordinates; always a rational integer.
Zint evaluate(const HermitianLattice& L, const std::vector<AlgebraicInteger>& x);

HermitianLattice orthogonal_sum(const HermitianLattice& a, const HermitianLattice& b);

/// Doubled trace Gram over the ordered Z-generators (g_1, w*g_1, ..., g_k, w*g_k):
/// entry = Tr(w^s * conj(w)^r * h_ij). Integer and symmetric by conjugate symmetry.
IMat trace_gram_doubled(const FieldParams& field,
                        const std::vector<std::vector<AlgebraicInteger>>& gram);

/// The 25 universal binary Hermitian lattices, grouped by field.
const std::vector<HermitianLattice>& catalog();

/// Text format: "m=<int>:[e11,e12;e21,e22]" with entries "a+b*w".
/// Also accepts a catalog label.
HermitianLattice parse_lattice(const std::string& text);
std::string to_string(const HermitianLattice& L);

}  // namespace hermitia
