#include <doctest.h>

#include <algorithm>

#include "hermitia/criteria.hpp"

using namespace hermitia;

TEST_CASE("criterion sets have the canonical contents") {
    const CriterionSet& s15 = criterion_set(SetName::S15);
    CHECK(s15.values == std::vector<i64>{1, 2, 3, 5, 6, 7, 10, 14, 15});
    const CriterionSet& s290 = criterion_set(SetName::S290);
    CHECK(s290.values.size() == 29);
    CHECK(std::is_sorted(s290.values.begin(), s290.values.end()));
    CHECK(s290.values.front() == 1);
    CHECK(s290.values.back() == 290);
    CHECK(std::count(s290.values.begin(), s290.values.end(), 290) == 1);
    // the Hermitian critical set is S15 with 13 added
    const CriterionSet& s15h = criterion_set(SetName::S15H);
    CHECK(s15h.values == std::vector<i64>{1, 2, 3, 5, 6, 7, 10, 13, 14, 15});
    CHECK(criterion_sets().size() == 3);
}

TEST_CASE("check_criterion returns verifiable witnesses and first failures") {
    QuadraticForm four_squares = QuadraticForm::diagonal({1, 1, 1, 1});
    CriterionOutcome out = check_criterion(four_squares, criterion_set(SetName::S290));
    CHECK(out.pass);
    REQUIRE(out.witnesses.size() == 29);
    for (size_t i = 0; i < out.witnesses.size(); ++i) {
        CHECK(out.witnesses[i].t == criterion_set(SetName::S290).values[i]);
        CHECK(four_squares.value(out.witnesses[i].vec) == out.witnesses[i].t);
    }

    QuadraticForm ternary = QuadraticForm::diagonal({1, 1, 1});
    CriterionOutcome fail = check_criterion(ternary, criterion_set(SetName::S15));
    CHECK(!fail.pass);
    CHECK(fail.first_failure == 7);
}

TEST_CASE("the Ramanujan whitelist entries are all universal") {
    const auto& list = ramanujan_diagonals();
    CHECK(list.size() == 7);
    for (const auto& quad : list) {
        QuadraticForm q = QuadraticForm::diagonal({quad[0], quad[1], quad[2], quad[3]});
        // diagonal quaternaries are classically integral, so the 15-Theorem
        // criterion certifies universality; the 290 check passes too
        CHECK(check_criterion(q, criterion_set(SetName::S15)).pass);
        CHECK(check_criterion(q, criterion_set(SetName::S290)).pass);
    }
}

TEST_CASE("recorded proof escalators") {
    const auto& es = proof_escalators();
    REQUIRE(es.size() == 1);
    CHECK(es[0] == parse_form("w^2+w*x+2*x^2+3*y^2+3*y*z+6*z^2"));
    CHECK(es[0].positive_definite());
}

TEST_CASE("certify routes the documented examples") {
    // <1,2> over Q(sqrt(-3)): interleaved trace form, certified by the 290-Theorem
    HermitianLattice a = diagonal_lattice(make_field(3), {1, 2}, "a");
    CertificationReport ra = certify(a);
    CHECK(ra.route == Route::Criterion290);
    CHECK(!ra.escalator);
    REQUIRE(ra.checks.size() == 3);
    CHECK(ra.checks[1].pass);  // S290

    // <1,3> over Q(sqrt(-7)): the recorded proof escalator; S290 passes but
    // certifying through it would be circular, so the route is ad hoc
    HermitianLattice b = diagonal_lattice(make_field(7), {1, 3}, "b");
    CertificationReport rb = certify(b);
    CHECK(rb.escalator);
    CHECK(rb.route == Route::AdHocRequired);
    CHECK(rb.checks[1].pass);
    CHECK(rb.empirical_pass);
    CHECK(rb.empirical_bound == 2000);

    // <1,1> over Q(sqrt(-1)): the sum of four squares, Ramanujan route
    HermitianLattice c = diagonal_lattice(make_field(1), {1, 1}, "c");
    CertificationReport rc = certify(c);
    CHECK(rc.route == Route::RamanujanDiagonal);
    REQUIRE(rc.matched_diagonal.has_value());
    CHECK(*rc.matched_diagonal == QuadraticForm::diagonal({1, 1, 1, 1}));
    CHECK(!rc.escalator);

    // S15H consistency holds in every case
    for (const CertificationReport* r : {&ra, &rb, &rc}) CHECK(r->checks[2].pass);
}
