#include "hermitia/criteria.hpp"

#include <stdexcept>

namespace hermitia {

const CriterionSet& criterion_set(SetName n) {
    static const CriterionSet s15{"S15", {1, 2, 3, 5, 6, 7, 10, 14, 15}};
    static const CriterionSet s290{
        "S290", {1,  2,  3,  5,  6,  7,  10, 13, 14, 15,  17,  19,  21,  22, 23,
                 26, 29, 30, 31, 34, 35, 37, 42, 58, 93, 110, 145, 203, 290}};
    static const CriterionSet s15h{"S15H", {1, 2, 3, 5, 6, 7, 10, 13, 14, 15}};
    switch (n) {
        case SetName::S15: return s15;
        case SetName::S290: return s290;
        case SetName::S15H: return s15h;
    }
    throw std::logic_error("unknown criterion set");
}

std::vector<CriterionSet> criterion_sets() {
    return {criterion_set(SetName::S15), criterion_set(SetName::S290), criterion_set(SetName::S15H)};
}

CriterionOutcome check_criterion(const QuadraticForm& q, const CriterionSet& set) {
    CriterionOutcome out;
    out.set_name = set.name;
    for (i64 t : set.values) {
        auto w = represents(q, t);
        if (!w) {
            out.pass = false;
            out.first_failure = t;
            return out;
        }
        out.witnesses.push_back(std::move(*w));
    }
    out.pass = true;
    return out;
}

const std::vector<std::array<i64, 4>>& ramanujan_diagonals() {
    // exactly the diagonal quadruples produced by the trace construction on
    // the catalog, all on Ramanujan's list of universal diagonal quaternaries
    static const std::vector<std::array<i64, 4>> list{
        {1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 4}, {1, 2, 5, 10},
        {1, 1, 3, 3}, {1, 2, 4, 8}, {1, 2, 3, 6},
    };
    return list;
}

const std::vector<QuadraticForm>& proof_escalators() {
    static const std::vector<QuadraticForm> list{
        parse_form("w^2+w*x+2*x^2+3*y^2+3*y*z+6*z^2"),
    };
    return list;
}

std::string to_string(Route r) {
    switch (r) {
        case Route::RamanujanDiagonal: return "RamanujanDiagonal";
        case Route::Criterion290: return "Criterion290";
        case Route::AdHocRequired: return "AdHocRequired";
    }
    return "?";
}

CertificationReport certify(const HermitianLattice& L, i64 empirical_bound) {
    CertificationReport rep;
    rep.label = L.label;
    rep.field_m = L.field.m;
    rep.lattice_text = to_string(L);
    rep.trace = trace_form(L);
    rep.nondegenerate = extract_basis(rep.trace).form;
    const QuadraticForm& q = rep.nondegenerate;

    if (q.vars() == 4) {
        for (const auto& quad : ramanujan_diagonals()) {
            QuadraticForm diag = QuadraticForm::diagonal({quad[0], quad[1], quad[2], quad[3]});
            if (is_equivalent(q, diag)) {
                rep.matched_diagonal = diag;
                break;
            }
        }
        for (const QuadraticForm& e : proof_escalators())
            if (is_equivalent(q, e)) {
                rep.escalator = true;
                break;
            }
    }
    for (SetName s : {SetName::S15, SetName::S290, SetName::S15H})
        rep.checks.push_back(check_criterion(q, criterion_set(s)));
    const CriterionOutcome& s290 = rep.checks[1];

    if (rep.matched_diagonal) {
        rep.route = Route::RamanujanDiagonal;
    } else if (!rep.escalator && s290.pass) {
        rep.route = Route::Criterion290;
    } else {
        rep.route = Route::AdHocRequired;
        rep.empirical_bound = empirical_bound;
        rep.empirical_pass = true;
        std::vector<bool> mask = represented_set(q, empirical_bound);
        for (i64 t = 1; t <= empirical_bound; ++t)
            if (!mask[t]) {
                rep.empirical_pass = false;
                rep.empirical_failure = t;
                break;
            }
    }
    return rep;
}

}  // namespace hermitia
