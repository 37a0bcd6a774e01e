#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace hermitia {

using Zint = boost::multiprecision::cpp_int;

/// The imaginary quadratic field Q(sqrt(-m)) for squarefree m > 0.
/// Its ring of integers has Z-basis {1, w} with w^2 = omega_trace*w - omega_norm:
///   w = (1+sqrt(-m))/2 when m = 3 mod 4, else w = sqrt(-m).
struct FieldParams {
    std::int64_t m = 0;
    std::int64_t omega_trace = 0;  // Tr(w): 1 if m = 3 mod 4, else 0
    std::int64_t omega_norm = 0;   // N(w): (1+m)/4 if m = 3 mod 4, else m

    bool operator==(const FieldParams&) const = default;
};

/// Throws std::invalid_argument for m <= 0 or m not squarefree.
FieldParams make_field(std::int64_t m);

/// Element a + b*w of the ring of integers, in coordinates over {1, w}.
struct AlgebraicInteger {
    Zint a;
    Zint b;
    FieldParams field;

    AlgebraicInteger() = default;
    AlgebraicInteger(Zint a_, Zint b_, FieldParams f)
        : a(std::move(a_)), b(std::move(b_)), field(f) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const AlgebraicInteger&) const = default;
};

AlgebraicInteger operator+(const AlgebraicInteger& x, const AlgebraicInteger& y);
AlgebraicInteger operator-(const AlgebraicInteger& x, const AlgebraicInteger& y);
AlgebraicInteger operator-(const AlgebraicInteger& x);
AlgebraicInteger operator*(const AlgebraicInteger& x, const AlgebraicInteger& y);

AlgebraicInteger conj(const AlgebraicInteger& z);
Zint norm(const AlgebraicInteger& z);   // z * conj(z), a rational integer >= 0
Zint trace(const AlgebraicInteger& z);  // z + conj(z)

AlgebraicInteger omega(const FieldParams& f);
AlgebraicInteger make_int(const FieldParams& f, std::int64_t a, std::int64_t b = 0);

/// "a+b*w" coordinate syntax used by the lattice text format.
std::string to_string(const AlgebraicInteger& z);
AlgebraicInteger parse_algebraic(const std::string& text, const FieldParams& f);

}  // namespace hermitia
