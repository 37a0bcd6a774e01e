#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "hermitia/escalate.hpp"

using namespace hermitia;

namespace {

// independent Gauss reduction of a positive definite binary doubled Gram
std::array<i64, 3> gauss_reduce(i64 p, i64 q, i64 r) {
    for (;;) {
        if (r < p) std::swap(p, r);
        i64 k = (q >= 0 ? (q + p / 2) / p : -((-q + p / 2) / p));
        i64 q2 = q - k * p;
        r = r - 2 * k * q + k * k * p;
        q = q2;
        if (q < 0) q = -q;
        if (r >= p && q <= p / 2) return {p, q, r};
    }
}

// brute-force binary escalation level: every escalation of x^2 (the unique
// rank-1 escalator, truant 2) within the Cauchy-Schwarz bound, deduplicated by
// Gauss reduction
std::map<std::array<i64, 3>, i64> oracle_binary_level(Regime regime) {
    std::map<std::array<i64, 3>, i64> classes;  // reduced gram -> truant
    i64 step = regime == Regime::Classical ? 2 : 1;
    for (i64 c = -2; c <= 2; c += step) {
        i64 p = 2, q = c, r = 4;  // doubled gram of x^2 + c*x*y + 2*y^2
        if (p * r - q * q <= 0) continue;
        auto key = gauss_reduce(p, q, r);
        QuadraticForm f(
            [&] { IMat d(2, 2); d.at(0, 0) = key[0]; d.at(0, 1) = d.at(1, 0) = key[1];
                  d.at(1, 1) = key[2]; return d; }());
        classes[key] = truant(f).value;
    }
    return classes;
}

}  // namespace

TEST_CASE("binary escalation level matches the brute-force oracle") {
    auto oracle_int = oracle_binary_level(Regime::IntegerValued);
    CHECK(oracle_int.size() == 3);
    std::multiset<i64> truants_int;
    for (const auto& [k, t] : oracle_int) truants_int.insert(t);
    CHECK(truants_int == std::multiset<i64>{3, 3, 5});

    auto oracle_cl = oracle_binary_level(Regime::Classical);
    CHECK(oracle_cl.size() == 2);

    for (Regime regime : {Regime::IntegerValued, Regime::Classical}) {
        EscalatorTree tree = build_tree(regime, 2);
        REQUIRE(tree.levels.size() == 3);
        CHECK(tree.levels[0].size() == 1);
        CHECK(tree.levels[1].size() == 1);
        CHECK(tree.levels[1][0].form == QuadraticForm::diagonal({1}));
        const auto& oracle = regime == Regime::Classical ? oracle_cl : oracle_int;
        REQUIRE(tree.levels[2].size() == oracle.size());
        std::multiset<i64> tree_truants, oracle_truants;
        for (const auto& node : tree.levels[2]) {
            REQUIRE(node.truant.has_value());
            tree_truants.insert(*node.truant);
            // the reduced representative is one of the oracle classes
            const IMat& d = node.form.doubled_gram();
            auto key = gauss_reduce(d.at(0, 0), d.at(0, 1), d.at(1, 1));
            CHECK(oracle.contains(key));
        }
        for (const auto& [k, t] : oracle) oracle_truants.insert(t);
        CHECK(tree_truants == oracle_truants);
    }
}

TEST_CASE("escalation children record valid witnesses and are deduplicated") {
    EscalatorNode root;
    root.form = QuadraticForm::diagonal({1});
    root.rank = 1;
    root.truant = 2;
    for (Regime regime : {Regime::Classical, Regime::IntegerValued}) {
        auto kids = escalations(root, regime);
        std::set<std::vector<i64>> keys;
        for (const auto& k : kids) {
            CHECK(k.rank == 2);
            CHECK(k.form.positive_definite());
            CHECK(k.form.value(k.truant_witness) == 2);  // attains the parent's truant
            auto key = reduction_key(k.form);
            CHECK(!keys.contains(key));
            keys.insert(key);
        }
        // repeated calls are deterministic
        auto again = escalations(root, regime);
        REQUIRE(again.size() == kids.size());
        for (size_t i = 0; i < kids.size(); ++i) CHECK(again[i].form == kids[i].form);
    }
}

TEST_CASE("classical tree reproduces the published 15-Theorem level counts to rank 3") {
    EscalatorTree tree = build_tree(Regime::Classical, 3);
    REQUIRE(tree.levels.size() == 4);
    CHECK(tree.levels[0].size() == 1);
    CHECK(tree.levels[1].size() == 1);
    CHECK(tree.levels[2].size() == 2);
    CHECK(tree.levels[3].size() == 9);
}

TEST_CASE("integer-valued ternary level has the documented 35 classes") {
    EscalatorTree tree = build_tree(Regime::IntegerValued, 3);
    REQUIRE(tree.levels.size() == 4);
    CHECK(tree.levels[3].size() == 35);
    // every node's parent pointer is in range and ranks match the level
    for (size_t r = 1; r < tree.levels.size(); ++r)
        for (const auto& node : tree.levels[r]) {
            CHECK(node.rank == static_cast<int>(r));
            CHECK(node.parent >= 0);
            CHECK(node.parent < static_cast<int>(tree.levels[r - 1].size()));
        }
}
