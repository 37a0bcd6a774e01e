#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitia/criteria.hpp"

namespace hermitia {

struct TableMatch {
    std::string label;
    std::string target;  // printed form from the classification tables
    MatchVerdict verdict = MatchVerdict::Distinct;
    bool ok = false;
};

struct PairFinding {
    std::string label_a, label_b;
    bool equivalent = false;
};

struct EscalatorFinding {
    std::string label;
    bool escalator = false;
};

struct ClassificationReport {
    std::vector<CertificationReport> lattices;     // all 25 catalog entries
    std::vector<TableMatch> diagonal_matches;      // 9, coefficient-exact
    std::vector<TableMatch> interleaved_matches;   // 8, coefficient-exact
    std::vector<TableMatch> nonfree_matches;       // 8, up to equivalence
    std::vector<PairFinding> duplicate_pairs;      // the two repeated rows
    std::vector<EscalatorFinding> escalators_interleaved;
    std::vector<EscalatorFinding> escalators_nonfree_nondiagonal;
    // route partition over distinct quadratic forms (duplicate pairs collapsed)
    int routes_ramanujan = 0;
    int routes_criterion290 = 0;
    int routes_adhoc = 0;
    bool overall_pass = false;
};

/// End-to-end verification of the computational content of the classification:
/// trace forms, table matches, per-lattice certification, duplicate pairs and
/// escalator claims. Failures land in the report, not in exceptions.
ClassificationReport verify_classification(i64 empirical_bound = 2000);

struct NegativeControl {
    std::string label;
    std::string form;
    std::optional<i64> truant_value;  // empty: inconclusive below the cap
};

/// Built-in near-miss lattices; each should have a small non-represented value.
std::vector<NegativeControl> negative_controls(i64 cap = 1000);

/// Deterministic JSON renderings (byte-identical across runs for equal inputs).
std::string to_json_string(const CertificationReport& rep, int indent = 2);
std::string to_json_string(const ClassificationReport& rep, int indent = 2);
std::string to_json_string(const std::vector<NegativeControl>& controls, int indent = 2);
std::string to_json_string(const EscalatorTree& tree, int indent = 2);

std::string to_text(const CertificationReport& rep);
std::string to_text(const ClassificationReport& rep);

}  // namespace hermitia
