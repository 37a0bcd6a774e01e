#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitia/enumerate.hpp"
#include "hermitia/qform.hpp"

namespace hermitia {

enum class Regime { Classical, IntegerValued };
std::string to_string(Regime r);

struct EscalatorNode {
    QuadraticForm form;               // reduced representative
    int rank = 0;
    std::optional<i64> truant;        // absent when nothing below the cap is missed
    int parent = -1;                  // index into the previous rank level
    std::vector<i64> truant_witness;  // vector attaining the parent's truant
};

/// One-variable escalations of a node with a truant: the new basis vector has
/// norm exactly the truant and cross coefficients bounded by Cauchy-Schwarz
/// (c^2 <= 4 * c_ii * t; even cross terms in the classical regime), filtered
/// to positive definite and deduplicated up to integral equivalence.
/// Children are reduced and come in a deterministic lexicographic order.
std::vector<EscalatorNode> escalations(const EscalatorNode& node, Regime regime);

struct EscalatorTree {
    Regime regime = Regime::IntegerValued;
    int max_rank = 4;
    i64 truant_cap = 1000;
    std::vector<std::vector<EscalatorNode>> levels;  // levels[r] = rank-r nodes
};

/// Breadth-first closure of escalations from the empty form, deduplicated
/// across each whole rank level.
EscalatorTree build_tree(Regime regime, int max_rank = 4, i64 truant_cap = 1000);

/// True iff q is equivalent to some rank-4 node, i.e. lies in the escalation
/// closure under this artifact's reconstruction of the rule. The classical
/// closure reproduces the published 15-Theorem counts (2 binary, 9 ternary,
/// 207 quaternary escalators). Escalator tables in the 290-Theorem literature
/// were produced with their own search and deduplication conventions and can
/// classify borderline forms differently; closure membership here is a
/// diagnostic, and catalog certification routes on the recorded
/// determinations in the criteria module instead.
bool is_escalator(const QuadraticForm& q, Regime regime, const EscalatorTree* tree = nullptr);

/// Lazily built, cached tree (max rank 4, default cap).
const EscalatorTree& cached_tree(Regime regime);

}  // namespace hermitia
