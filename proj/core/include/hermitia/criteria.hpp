#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hermitia/enumerate.hpp"
#include "hermitia/escalate.hpp"
#include "hermitia/hermitian.hpp"
#include "hermitia/qform.hpp"

namespace hermitia {

enum class SetName { S15, S290, S15H };

struct CriterionSet {
    std::string name;
    std::vector<i64> values;  // sorted
};

const CriterionSet& criterion_set(SetName n);
std::vector<CriterionSet> criterion_sets();

struct CriterionOutcome {
    std::string set_name;
    bool pass = false;
    std::optional<i64> first_failure;
    std::vector<RepresentationWitness> witnesses;  // one per represented member
};

/// Runs `represents` on every member of the set; passes iff all are attained.
CriterionOutcome check_criterion(const QuadraticForm& q, const CriterionSet& set);

/// Diagonal quaternary coefficient quadruples whose universality is covered by
/// Ramanujan's list, restricted to the ones the trace construction produces.
const std::vector<std::array<i64, 4>>& ramanujan_diagonals();

/// Quaternary forms whose universality is established inside the proof of the
/// 290-Theorem itself (they appear in its escalator tables), so certifying
/// them via the S290 criterion would be circular. Recorded determinations of
/// the classification; among this catalog's trace forms there is exactly one.
const std::vector<QuadraticForm>& proof_escalators();

enum class Route { RamanujanDiagonal, Criterion290, AdHocRequired };
std::string to_string(Route r);

struct CertificationReport {
    std::string label;
    i64 field_m = 0;
    std::string lattice_text;              // input echo
    QuadraticForm trace;                   // 2k-variable trace form
    QuadraticForm nondegenerate;           // after basis extraction
    std::optional<QuadraticForm> matched_diagonal;  // whitelist entry, Ramanujan route
    Route route = Route::AdHocRequired;
    bool escalator = false;  // matches a proof_escalators() entry (see certify)
    std::vector<CriterionOutcome> checks;  // S15, S290, S15H
    i64 empirical_bound = 0;               // AdHoc route only; proves nothing
    bool empirical_pass = false;
    std::optional<i64> empirical_failure;
};

/// Route selection mirrors the structure of the classification proof:
/// a whitelist diagonal gives the Ramanujan route; otherwise a form passing
/// the 290 criterion is certified by the 290-Theorem, unless it is one of the
/// recorded proof escalators (circularity), which -- like anything failing
/// the criteria -- needs an ad hoc argument and only gets an empirical
/// bounded check. The escalator flag in the report carries the recorded
/// determination that drives routing, not escalation-closure membership;
/// is_escalator computes the latter as a diagnostic.
CertificationReport certify(const HermitianLattice& L, i64 empirical_bound = 2000);

}  // namespace hermitia
