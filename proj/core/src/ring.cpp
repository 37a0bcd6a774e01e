#include "hermitia/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace hermitia {

FieldParams make_field(std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("make_field: m must be positive");
    // trial division is plenty for desk-scale m
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % (d * d) == 0)
            throw std::invalid_argument("make_field: m must be squarefree");
    }
    FieldParams f;
    f.m = m;
    if (m % 4 == 3) {
        f.omega_trace = 1;
        f.omega_norm = (1 + m) / 4;
    } else {
        f.omega_trace = 0;
        f.omega_norm = m;
    }
    return f;
}

static void require_same_field(const AlgebraicInteger& x, const AlgebraicInteger& y) {
    if (!(x.field == y.field))
        throw std::invalid_argument("mixed-field operands");
}

AlgebraicInteger operator+(const AlgebraicInteger& x, const AlgebraicInteger& y) {
    require_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.field};
}

AlgebraicInteger operator-(const AlgebraicInteger& x, const AlgebraicInteger& y) {
    require_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.field};
}

AlgebraicInteger operator-(const AlgebraicInteger& x) {
    return {-x.a, -x.b, x.field};
}

AlgebraicInteger operator*(const AlgebraicInteger& x, const AlgebraicInteger& y) {
    require_same_field(x, y);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = t*w - n
    const Zint t = x.field.omega_trace;
    const Zint n = x.field.omega_norm;
    Zint cross = x.b * y.b;
    return {x.a * y.a - n * cross, x.a * y.b + x.b * y.a + t * cross, x.field};
}

AlgebraicInteger conj(const AlgebraicInteger& z) {
    // conj(w) = t - w
    return {z.a + Zint(z.field.omega_trace) * z.b, -z.b, z.field};
}

Zint norm(const AlgebraicInteger& z) {
    const Zint t = z.field.omega_trace;
    const Zint n = z.field.omega_norm;
    return z.a * z.a + t * z.a * z.b + n * z.b * z.b;
}

Zint trace(const AlgebraicInteger& z) {
    return 2 * z.a + Zint(z.field.omega_trace) * z.b;
}

AlgebraicInteger omega(const FieldParams& f) { return {0, 1, f}; }

AlgebraicInteger make_int(const FieldParams& f, std::int64_t a, std::int64_t b) {
    return {a, b, f};
}

std::string to_string(const AlgebraicInteger& z) {
    if (z.b == 0) return z.a.str();
    std::string w_part;
    if (z.b == 1) w_part = "w";
    else if (z.b == -1) w_part = "-w";
    else w_part = z.b.str() + "*w";
    if (z.a == 0) return w_part;
    if (z.b > 0) return z.a.str() + "+" + (z.b == 1 ? "w" : z.b.str() + "*w");
    return z.a.str() + "-" + (z.b == -1 ? "w" : Zint(-z.b).str() + "*w");
}

AlgebraicInteger parse_algebraic(const std::string& text, const FieldParams& f) {
    // grammar: term (('+'|'-') term)* where term = int | [int '*'] 'w'
    Zint a = 0, b = 0;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty ring element");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in ring element: " + text);
        }
        first = false;
        skip_ws();
        Zint coeff = 1;
        bool saw_digits = false;
        std::string digits;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            digits += text[i++];
            saw_digits = true;
        }
        if (saw_digits) coeff = Zint(digits);
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i < text.size() && text[i] == 'w') {
            ++i;
            b += sign * coeff;
        } else {
            if (!saw_digits)
                throw std::invalid_argument("bad ring element: " + text);
            a += sign * coeff;
        }
    }
    return {a, b, f};
}

}  // namespace hermitia
