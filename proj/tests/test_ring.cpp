#include <doctest.h>

#include <random>

#include "hermitia/linalg.hpp"
#include "hermitia/ring.hpp"

using namespace hermitia;

TEST_CASE("field parameters follow the m mod 4 split") {
    FieldParams f3 = make_field(3);
    CHECK(f3.omega_trace == 1);
    CHECK(f3.omega_norm == 1);
    FieldParams f7 = make_field(7);
    CHECK(f7.omega_trace == 1);
    CHECK(f7.omega_norm == 2);
    FieldParams f2 = make_field(2);
    CHECK(f2.omega_trace == 0);
    CHECK(f2.omega_norm == 2);
    FieldParams f1 = make_field(1);
    CHECK(f1.omega_trace == 0);
    CHECK(f1.omega_norm == 1);

    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(-5), std::invalid_argument);
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(12), std::invalid_argument);
    CHECK_THROWS_AS(make_field(18), std::invalid_argument);
}

TEST_CASE("omega satisfies its minimal polynomial") {
    for (i64 m : {1, 2, 3, 5, 7, 11, 15, 19, 23, 31}) {
        FieldParams f = make_field(m);
        AlgebraicInteger w = omega(f);
        AlgebraicInteger lhs = w * w;
        AlgebraicInteger rhs = make_int(f, -f.omega_norm, f.omega_trace);
        CHECK(lhs == rhs);
        CHECK(trace(w) == f.omega_trace);
        CHECK(norm(w) == f.omega_norm);
    }
}

TEST_CASE("conjugation, norm and trace identities on random elements") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<i64> coef(-50, 50);
    for (i64 m : {1, 2, 3, 5, 7, 10, 23}) {
        FieldParams f = make_field(m);
        for (int it = 0; it < 50; ++it) {
            AlgebraicInteger x = make_int(f, coef(rng), coef(rng));
            AlgebraicInteger y = make_int(f, coef(rng), coef(rng));
            CHECK(conj(conj(x)) == x);
            CHECK(conj(x + y) == conj(x) + conj(y));
            CHECK(conj(x * y) == conj(x) * conj(y));
            CHECK(norm(x * y) == norm(x) * norm(y));
            CHECK(trace(x + y) == trace(x) + trace(y));
            // N(x) and Tr(x) are the coefficients of the characteristic polynomial
            AlgebraicInteger t_as_elt{trace(x), 0, f};
            AlgebraicInteger n_as_elt{norm(x), 0, f};
            CHECK(x * x - t_as_elt * x + n_as_elt == make_int(f, 0, 0));
            CHECK(norm(x) >= 0);
        }
    }
}

TEST_CASE("string round trip including negative coordinates") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<i64> coef(-30, 30);
    FieldParams f = make_field(7);
    for (int it = 0; it < 200; ++it) {
        AlgebraicInteger x = make_int(f, coef(rng), coef(rng));
        CHECK(parse_algebraic(to_string(x), f) == x);
    }
    CHECK(parse_algebraic("2-3*w", f) == make_int(f, 2, -3));
    CHECK(parse_algebraic("-1+w", f) == make_int(f, -1, 1));
    CHECK(parse_algebraic("w", f) == omega(f));
    CHECK(parse_algebraic("0", f) == make_int(f, 0));
}
