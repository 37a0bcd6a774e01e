#include "hermitia/escalate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hermitia {

using i128 = __int128;

std::string to_string(Regime r) {
    return r == Regime::Classical ? "classical" : "integer-valued";
}

namespace {

void parallel_over(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int threads = thread_budget();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = static_cast<int>(std::min<std::size_t>(threads, count));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            detail::force_sequential = true;
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

struct Candidate {
    QuadraticForm form;        // raw extension (parent block + cross column)
    std::vector<i64> key;      // reduction key
};

// All positive-definite one-variable extensions of `parent` by a vector of
// norm t, one per +-cross-column pair, keyed for deduplication.
std::vector<Candidate> raw_extensions(const QuadraticForm& parent, i64 t, Regime regime) {
    const int k = parent.vars();
    std::vector<Candidate> out;
    if (k == 0) {
        Candidate c{QuadraticForm::diagonal({t}), {}};
        c.key = reduction_key(c.form);
        out.push_back(std::move(c));
        return out;
    }
    const IMat& d = parent.doubled_gram();
    IMat adj = adjugate(d);
    i64 detd = det(d);
    if (detd <= 0) throw std::invalid_argument("escalations: parent not positive definite");
    const i64 step = regime == Regime::Classical ? 2 : 1;

    // child is positive definite iff c^T adj(D) c < 2t det(D); this ellipsoid
    // sits inside the Cauchy-Schwarz box c_i^2 <= 2 D_ii t
    std::vector<i64> hi(k);
    for (int i = 0; i < k; ++i) {
        i64 bound = 2 * d.at(i, i) * t;
        i64 h = 0;
        while ((h + 1) * (h + 1) <= bound) ++h;
        hi[i] = h - (h % step);
    }
    std::vector<i64> c(k, 0);
    auto emit = [&](const std::vector<i64>& cross) {
        IMat child(k + 1, k + 1);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) child.at(i, j) = d.at(i, j);
        for (int i = 0; i < k; ++i) {
            child.at(i, k) = cross[i];
            child.at(k, i) = cross[i];
        }
        child.at(k, k) = 2 * t;
        Candidate cand{QuadraticForm(std::move(child)), {}};
        cand.key = reduction_key(cand.form);
        out.push_back(std::move(cand));
    };
    // lexicographic over cross columns, first nonzero entry positive
    std::function<void(int, bool)> rec = [&](int i, bool all_zero) {
        if (i == k) {
            i128 qv = 0;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) qv += i128(adj.at(a, b)) * c[a] * c[b];
            if (qv < i128(2) * t * detd) emit(c);
            return;
        }
        i64 lo = all_zero ? 0 : -hi[i];
        for (i64 v = lo; v <= hi[i]; v += step) {
            c[i] = v;
            rec(i + 1, all_zero && v == 0);
        }
        c[i] = 0;
    };
    rec(0, true);
    return out;
}

// Equivalence classes of the candidates, ordered by reduction key.
struct ClassEntry {
    QuadraticForm reduced;
    std::vector<i64> key;
    QuadraticForm raw;  // first-seen raw extension (keeps the escalation witness)
    int parent = -1;
};

void merge_candidates(std::vector<ClassEntry>& classes, std::map<std::vector<i64>, std::size_t>& by_key,
                      Candidate&& cand, int parent_index) {
    if (by_key.contains(cand.key)) return;
    // distinct keys may still be equivalent forms; confirm within det buckets
    i64 cdet = cand.form.det_doubled();
    for (const ClassEntry& cl : classes) {
        if (cl.reduced.det_doubled() != cdet) continue;
        if (is_equivalent(cl.reduced, cand.form)) {
            by_key.emplace(std::move(cand.key), &cl - classes.data());
            return;
        }
    }
    ClassEntry entry;
    entry.reduced = reduce(cand.form).form;
    entry.key = cand.key;
    entry.raw = std::move(cand.form);
    entry.parent = parent_index;
    by_key.emplace(entry.key, classes.size());
    classes.push_back(std::move(entry));
}

std::vector<EscalatorNode> nodes_from_classes(std::vector<ClassEntry>&& classes, i64 parent_truant) {
    std::sort(classes.begin(), classes.end(),
              [](const ClassEntry& a, const ClassEntry& b) { return a.key < b.key; });
    std::vector<EscalatorNode> nodes;
    nodes.reserve(classes.size());
    for (ClassEntry& cl : classes) {
        EscalatorNode node;
        node.rank = cl.reduced.vars();
        node.parent = cl.parent;
        // the raw extension attains the parent's truant on its last unit
        // vector; carry that witness into the reduced coordinates
        ReducedForm r = reduce(cl.raw);
        IMat inv = unimodular_inverse(r.map.U);
        node.truant_witness.assign(node.rank, 0);
        for (int i = 0; i < node.rank; ++i) node.truant_witness[i] = inv.at(i, node.rank - 1);
        node.form = std::move(cl.reduced);
        if (node.form.value(node.truant_witness) != parent_truant)
            throw std::logic_error("escalation witness does not attain the parent truant");
        nodes.push_back(std::move(node));
    }
    return nodes;
}

}  // namespace

std::vector<EscalatorNode> escalations(const EscalatorNode& node, Regime regime) {
    if (!node.truant)
        throw std::invalid_argument("escalations: node has no truant");
    std::vector<ClassEntry> classes;
    std::map<std::vector<i64>, std::size_t> by_key;
    for (Candidate& cand : raw_extensions(node.form, *node.truant, regime))
        merge_candidates(classes, by_key, std::move(cand), -1);
    return nodes_from_classes(std::move(classes), *node.truant);
}

EscalatorTree build_tree(Regime regime, int max_rank, i64 truant_cap) {
    if (max_rank < 0 || max_rank > 4)
        throw std::invalid_argument("build_tree: max_rank must be 0..4");
    EscalatorTree tree;
    tree.regime = regime;
    tree.max_rank = max_rank;
    tree.truant_cap = truant_cap;

    EscalatorNode root;
    root.form = QuadraticForm::zero(0);
    root.rank = 0;
    root.truant = 1;
    tree.levels.push_back({std::move(root)});

    for (int rank = 1; rank <= max_rank; ++rank) {
        const std::vector<EscalatorNode>& parents = tree.levels.back();

        // expand parents in parallel, then merge in parent order so the level
        // contents do not depend on thread scheduling
        std::vector<std::vector<Candidate>> per_parent(parents.size());
        parallel_over(parents.size(), [&](std::size_t i) {
            if (parents[i].truant)
                per_parent[i] = raw_extensions(parents[i].form, *parents[i].truant, regime);
        });
        std::vector<ClassEntry> classes;
        std::map<std::vector<i64>, std::size_t> by_key;
        for (std::size_t i = 0; i < parents.size(); ++i)
            for (Candidate& cand : per_parent[i])
                merge_candidates(classes, by_key, std::move(cand), static_cast<int>(i));
        if (classes.empty()) break;

        i64 level_parent_truant = 0;  // witnesses are validated per node below
        std::vector<EscalatorNode> level;
        {
            // nodes_from_classes validates witnesses against a single truant;
            // here parents differ, so validate individually instead
            std::sort(classes.begin(), classes.end(),
                      [](const ClassEntry& a, const ClassEntry& b) { return a.key < b.key; });
            for (ClassEntry& cl : classes) {
                EscalatorNode node;
                node.rank = cl.reduced.vars();
                node.parent = cl.parent;
                ReducedForm r = reduce(cl.raw);
                IMat inv = unimodular_inverse(r.map.U);
                node.truant_witness.assign(node.rank, 0);
                for (int i = 0; i < node.rank; ++i)
                    node.truant_witness[i] = inv.at(i, node.rank - 1);
                node.form = std::move(cl.reduced);
                i64 want = *parents[cl.parent].truant;
                if (node.form.value(node.truant_witness) != want)
                    throw std::logic_error("escalation witness does not attain the parent truant");
                level.push_back(std::move(node));
            }
        }
        (void)level_parent_truant;

        parallel_over(level.size(), [&](std::size_t i) {
            TruantResult tr = truant(level[i].form, truant_cap);
            if (!tr.exhausted) level[i].truant = tr.value;
        });
        tree.levels.push_back(std::move(level));
    }
    return tree;
}

const EscalatorTree& cached_tree(Regime regime) {
    static std::mutex mu;
    static std::map<int, EscalatorTree> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(static_cast<int>(regime));
    if (inserted) it->second = build_tree(regime);
    return it->second;
}

bool is_escalator(const QuadraticForm& q, Regime regime, const EscalatorTree* tree) {
    if (q.vars() != 4 || !q.positive_definite())
        throw std::invalid_argument("is_escalator: expects a positive-definite quaternary form");
    const EscalatorTree& t = tree ? *tree : cached_tree(regime);
    if (t.levels.size() < 5) return false;
    i64 d = q.det_doubled();
    auto key = reduction_key(q);
    for (const EscalatorNode& node : t.levels[4]) {
        if (node.form.det_doubled() != d) continue;
        if (reduction_key(node.form) == key) return true;
        if (is_equivalent(node.form, q)) return true;
    }
    return false;
}

}  // namespace hermitia
