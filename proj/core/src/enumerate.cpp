#include "hermitia/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hermitia {

namespace detail {
thread_local bool force_sequential = false;
}

int thread_budget() {
    if (detail::force_sequential) return 1;
    if (const char* env = std::getenv("HERMITIA_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2, exact over rationals.
struct Decomp {
    int n = 0;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;
};

Decomp decompose(const QuadraticForm& q) {
    const int n = q.vars();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(q.doubled_gram().at(i, j), 2);
    Decomp dec;
    dec.n = n;
    dec.d.assign(n, Rat(0));
    dec.u.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int k = 0; k < n; ++k) {
        if (!(Rat(0) < a[k][k]))
            throw std::invalid_argument("enumeration requires a positive-definite form");
        dec.d[k] = a[k][k];
        for (int j = k + 1; j < n; ++j) dec.u[k][j] = a[k][j] / a[k][k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = a[i][j] - a[k][i] * a[k][j] / a[k][k];
    }
    return dec;
}

// Integer solutions of (x + c)^2 <= r form a contiguous interval; locate it
// with a float estimate confirmed exactly.
struct Interval {
    i64 lo = 0, hi = -1;
    bool empty() const { return lo > hi; }
};

Interval solve_range(Rat c, Rat r) {
    Interval iv;
    if (r.num < 0) return iv;
    double s = std::sqrt(std::max(0.0, rat_double(r)));
    double cd = rat_double(c);
    auto inside = [&](i64 x) {
        Rat t = Rat(x) + c;
        return t * t <= r;
    };
    i64 hi = static_cast<i64>(std::floor(-cd + s));
    while (inside(hi + 1)) ++hi;
    i64 lo = static_cast<i64>(std::ceil(-cd - s));
    while (inside(lo - 1)) --lo;
    while (lo <= hi && !inside(hi)) --hi;
    while (lo <= hi && !inside(lo)) ++lo;
    iv.lo = lo;
    iv.hi = hi;
    return iv;
}

// Depth-first sweep of all integer vectors with Q(x) <= budget. Levels run
// from n-1 down to 0 because the squared term at level i only involves later
// coordinates. With half_orbit, the outermost nonzero coordinate is kept
// nonnegative, yielding one representative per +-v pair.
struct Sweep {
    const Decomp* dec;
    Rat budget;
    bool half_orbit = true;
    std::vector<i64> x;

    template <typename Leaf>
    void run(Leaf&& leaf) {
        x.assign(dec->n, 0);
        if (dec->n == 0) return;
        descend(dec->n - 1, Rat(0), true, leaf);
    }

    template <typename Leaf>
    void descend(int level, Rat used, bool all_zero, Leaf&& leaf) {
        Rat c(0);
        for (int j = level + 1; j < dec->n; ++j)
            if (x[j] != 0) c = c + dec->u[level][j] * Rat(x[j]);
        Interval iv = solve_range(c, (budget - used) / dec->d[level]);
        if (iv.empty()) return;
        i64 lo = iv.lo;
        if (half_orbit && all_zero) lo = std::max<i64>(lo, 0);
        for (i64 v = lo; v <= iv.hi; ++v) {
            x[level] = v;
            Rat t = Rat(v) + c;
            Rat used2 = used + dec->d[level] * t * t;
            if (level == 0) {
                if (used2.den != 1) throw std::logic_error("non-integer form value");
                leaf(x, used2.num);
            } else {
                descend(level - 1, used2, all_zero && v == 0, leaf);
            }
        }
        x[level] = 0;
    }
};

}  // namespace

std::optional<RepresentationWitness> represents(const QuadraticForm& q, i64 t) {
    if (t < 0) throw std::invalid_argument("represents: negative target");
    const int n = q.vars();
    if (t == 0) return RepresentationWitness{0, std::vector<i64>(n, 0)};
    if (n == 0) return std::nullopt;
    Decomp dec = decompose(q);

    // exact-attainment search: iterate outer levels, solve the last level as
    // an equality instead of scanning its whole interval
    std::vector<i64> x(n, 0);
    std::optional<RepresentationWitness> found;
    std::function<void(int, Rat, bool)> go = [&](int level, Rat used, bool all_zero) {
        if (found) return;
        Rat c(0);
        for (int j = level + 1; j < n; ++j)
            if (x[j] != 0) c = c + dec.u[level][j] * Rat(x[j]);
        Rat r = (Rat(t) - used) / dec.d[level];
        if (r.num < 0) return;
        if (level == 0) {
            // (x + c)^2 == r exactly
            double s = std::sqrt(std::max(0.0, rat_double(r)));
            double cd = rat_double(c);
            for (double root : {-cd - s, -cd + s}) {
                i64 base = static_cast<i64>(std::llround(root));
                for (i64 v = base - 2; v <= base + 2 && !found; ++v) {
                    Rat d0 = Rat(v) + c;
                    if (d0 * d0 == r) {
                        x[0] = v;
                        RepresentationWitness w{t, x};
                        for (i64 xi : w.vec) {
                            if (xi > 0) break;
                            if (xi < 0) {
                                for (i64& e : w.vec) e = -e;
                                break;
                            }
                        }
                        if (q.value(w.vec) != t) throw std::logic_error("witness check failed");
                        found = std::move(w);
                    }
                }
            }
            x[0] = 0;
            return;
        }
        Interval iv = solve_range(c, r);
        if (iv.empty()) return;
        i64 lo = iv.lo;
        if (all_zero) lo = std::max<i64>(lo, 0);
        for (i64 v = lo; v <= iv.hi && !found; ++v) {
            x[level] = v;
            Rat d0 = Rat(v) + c;
            go(level - 1, used + dec.d[level] * d0 * d0, all_zero && v == 0);
        }
        x[level] = 0;
    };
    go(n - 1, Rat(0), true);
    return found;
}

namespace {

void sweep_mask(const Decomp& dec, i64 budget, std::optional<std::pair<i64, i64>> outer_range,
                std::vector<bool>& mask) {
    Sweep sw{&dec, Rat(budget)};
    if (!outer_range) {
        sw.run([&](const std::vector<i64>&, i64 val) { mask[val] = true; });
        return;
    }
    // fixed slice of the outermost coordinate (parallel partitioning)
    const int n = dec.n;
    sw.x.assign(n, 0);
    for (i64 v = outer_range->first; v <= outer_range->second; ++v) {
        sw.x[n - 1] = v;
        Rat t = Rat(v);
        Rat used = dec.d[n - 1] * t * t;
        if (Rat(budget) < used) continue;
        if (n == 1) {
            if (used.den != 1) throw std::logic_error("non-integer form value");
            mask[used.num] = true;
        } else {
            sw.descend(n - 2, used, v == 0, [&](const std::vector<i64>&, i64 val) { mask[val] = true; });
        }
    }
}

}  // namespace

std::vector<bool> represented_set(const QuadraticForm& q, i64 B) {
    if (B < 1) throw std::invalid_argument("represented_set: bound must be positive");
    std::vector<bool> mask(B + 1, false);
    mask[0] = true;
    const int n = q.vars();
    if (n == 0) return mask;
    Decomp dec = decompose(q);

    Interval outer = solve_range(Rat(0), Rat(B) / dec.d[n - 1]);
    i64 lo = std::max<i64>(outer.lo, 0), hi = outer.hi;  // half orbit
    int threads = thread_budget();
    i64 span = hi - lo + 1;
    if (threads <= 1 || span < 4 || B < 512) {
        sweep_mask(dec, B, std::nullopt, mask);
        return mask;
    }
    int workers = static_cast<int>(std::min<i64>(threads, span));
    std::vector<std::vector<bool>> parts(workers, std::vector<bool>(B + 1, false));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        i64 a = lo + span * w / workers;
        i64 b = lo + span * (w + 1) / workers - 1;
        pool.emplace_back([&, w, a, b] { sweep_mask(dec, B, std::pair<i64, i64>{a, b}, parts[w]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts)
        for (i64 i = 0; i <= B; ++i)
            if (p[i]) mask[i] = true;
    return mask;
}

std::vector<RepresentationWitness> vectors_up_to(const QuadraticForm& q, i64 B) {
    std::vector<RepresentationWitness> out;
    if (q.vars() == 0 || B < 1) return out;
    Decomp dec = decompose(q);
    Sweep sw{&dec, Rat(B)};
    sw.run([&](const std::vector<i64>& x, i64 val) {
        if (val >= 1) out.push_back({val, x});
    });
    return out;
}

TruantResult truant(const QuadraticForm& q, i64 cap) {
    if (cap < 1) throw std::invalid_argument("truant: cap must be positive");
    if (!q.positive_semidefinite())
        throw std::invalid_argument("truant: form not positive semidefinite");
    QuadraticForm work = q;
    if (q.rank() < q.vars()) work = extract_basis(q).form;
    if (work.vars() == 0) return {false, 1};

    i64 c = std::min<i64>(15, cap);
    while (true) {
        std::vector<bool> mask = represented_set(work, c);
        for (i64 t = 1; t <= c; ++t)
            if (!mask[t]) return {false, t};
        if (c == cap) return {true, 0};
        c = std::min(cap, c * 4);
    }
}

}  // namespace hermitia
