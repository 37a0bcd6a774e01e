#include "hermitia/qform.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hermitia/enumerate.hpp"

namespace hermitia {

using i128 = __int128;

QuadraticForm::QuadraticForm(IMat d) : D_(std::move(d)) {
    if (D_.rows != D_.cols) throw std::invalid_argument("QuadraticForm: Gram not square");
    for (int i = 0; i < D_.rows; ++i) {
        if (D_.at(i, i) % 2 != 0)
            throw std::invalid_argument("QuadraticForm: odd doubled diagonal");
        for (int j = 0; j < i; ++j)
            if (D_.at(i, j) != D_.at(j, i))
                throw std::invalid_argument("QuadraticForm: Gram not symmetric");
    }
}

QuadraticForm QuadraticForm::diagonal(const std::vector<i64>& d) {
    IMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = 2 * d[i];
    return QuadraticForm(m);
}

QuadraticForm QuadraticForm::from_coeffs(int n, const std::vector<std::array<i64, 3>>& coeffs) {
    IMat m(n, n);
    for (const auto& [i, j, c] : coeffs) {
        if (i < 0 || j < i || j >= n) throw std::invalid_argument("from_coeffs: bad index");
        if (i == j) m.at(int(i), int(i)) += 2 * c;
        else {
            m.at(int(i), int(j)) += c;
            m.at(int(j), int(i)) += c;
        }
    }
    return QuadraticForm(m);
}

i64 QuadraticForm::coeff(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i == j ? D_.at(i, i) / 2 : D_.at(i, j);
}

i64 QuadraticForm::value(std::span<const i64> x) const {
    if (static_cast<int>(x.size()) != D_.rows)
        throw std::invalid_argument("value: dimension mismatch");
    i128 acc = 0;
    for (int i = 0; i < D_.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < D_.cols; ++j) acc += i128(D_.at(i, j)) * x[i] * x[j];
    }
    acc /= 2;
    if (acc > i128(INT64_MAX) || acc < i128(INT64_MIN)) throw std::overflow_error("value overflow");
    return static_cast<i64>(acc);
}

bool QuadraticForm::is_diagonal() const {
    for (int i = 0; i < D_.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (D_.at(i, j) != 0) return false;
    return true;
}

bool QuadraticForm::positive_definite() const { return analyze_symmetric(D_).pd; }
bool QuadraticForm::positive_semidefinite() const { return analyze_symmetric(D_).psd; }
int QuadraticForm::rank() const { return analyze_symmetric(D_).rank; }
i64 QuadraticForm::det_doubled() const { return det(D_); }

UnimodularMap::UnimodularMap(IMat u) : U(std::move(u)) {
    if (U.rows != U.cols) throw std::invalid_argument("UnimodularMap: not square");
    i64 d = det(U);
    if (d != 1 && d != -1) throw std::invalid_argument("UnimodularMap: determinant not +-1");
}

QuadraticForm apply(const QuadraticForm& q, const IMat& u) {
    if (u.rows != q.vars()) throw std::invalid_argument("apply: size mismatch");
    return QuadraticForm(u.transposed() * q.doubled_gram() * u);
}

IMat unimodular_inverse(const IMat& u) {
    const int n = u.rows;
    i64 d = det(u);
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: determinant not +-1");
    IMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = u.at(r, c);
                }
                ++rr;
            }
            i64 cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = d * cof;
        }
    return inv;
}

QuadraticForm trace_form(const HermitianLattice& L) {
    return QuadraticForm(trace_gram_doubled(L.field, L.gram));
}

ExtractedBasis extract_basis(const QuadraticForm& q) {
    if (!q.positive_semidefinite())
        throw std::invalid_argument("extract_basis: form not positive semidefinite");
    const int n = q.vars();
    ColEchelon ce = column_echelon(q.doubled_gram());
    if (ce.rank == n) return {q, IMat::identity(n)};
    // non-kernel columns of U restrict the form to a complement of the
    // (saturated) integer kernel
    IMat t(n, ce.rank);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < ce.rank; ++j) t.at(i, j) = ce.U.at(i, j);
    IMat g = t.transposed() * q.doubled_gram() * t;
    return {QuadraticForm(g), t};
}

namespace {

std::vector<i64> coeff_tuple(const IMat& d) {
    std::vector<i64> t;
    t.reserve(std::size_t(d.rows) * (d.rows + 1) / 2);
    for (int i = 0; i < d.rows; ++i) {
        t.push_back(d.at(i, i) / 2);
        for (int j = i + 1; j < d.rows; ++j) t.push_back(d.at(i, j));
    }
    return t;
}

// Greedy Lagrange/Minkowski-style pair moves on the doubled Gram; tracks the
// basis transform in u.
void greedy_pair_reduce(IMat& d, IMat& u) {
    const int n = d.rows;
    auto col_move = [&](int i, int j, i64 q) {
        // basis move b_i -= q b_j
        for (int r = 0; r < u.rows; ++r) u.at(r, i) -= q * u.at(r, j);
        for (int r = 0; r < n; ++r) d.at(r, i) -= q * d.at(r, j);
        for (int c = 0; c < n; ++c) d.at(i, c) -= q * d.at(j, c);
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < u.rows; ++r) std::swap(u.at(r, i), u.at(r, j));
        for (int r = 0; r < n; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
    };
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 10000) throw std::runtime_error("pair reduction failed to settle");
        changed = false;
        for (int j = 0; j < n; ++j)
            for (int i = j + 1; i < n; ++i)
                if (d.at(i, i) < d.at(j, j)) { col_swap(i, j); changed = true; }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (i == j || d.at(j, j) == 0) continue;
                // nearest integer to d_ij / d_jj
                i64 q = floor_div(2 * d.at(i, j) + d.at(j, j), 2 * d.at(j, j));
                if (q == 0) continue;
                i64 old_diag = d.at(i, i), old_off = std::abs(d.at(i, j));
                col_move(i, j, q);
                if (d.at(i, i) < old_diag ||
                    (d.at(i, i) == old_diag && std::abs(d.at(i, j)) < old_off)) {
                    changed = true;
                } else {
                    col_move(i, j, -q);  // no improvement, undo
                }
            }
        }
    }
}

// All signed permutations with the first sign fixed positive (a global sign
// flip leaves the form unchanged).
template <typename Fn>
void for_each_signed_permutation(int n, Fn&& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned signs = 0; signs < (1u << (n > 0 ? n - 1 : 0)); ++signs) {
            IMat p(n, n);
            for (int k = 0; k < n; ++k) {
                int s = (k > 0 && (signs >> (k - 1)) & 1u) ? -1 : 1;
                p.at(perm[k], k) = s;
            }
            fn(p);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Lexicographically minimal coefficient tuple over signed permutations,
// computed by direct indexing with early abort.
std::vector<i64> min_signed_perm(const IMat& d, IMat* best_p_out) {
    const int n = d.rows;
    std::vector<i64> best = coeff_tuple(d);
    std::vector<int> best_perm(n);
    std::iota(best_perm.begin(), best_perm.end(), 0);
    unsigned best_signs = 0;
    if (n > 0) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
                auto sign_of = [&](int k) -> i64 {
                    return (k > 0 && ((signs >> (k - 1)) & 1u)) ? -1 : 1;
                };
                std::size_t idx = 0;
                int cmp = 0;  // -1 candidate smaller, +1 larger
                for (int i = 0; i < n && cmp == 0; ++i) {
                    i64 v = d.at(perm[i], perm[i]) / 2;
                    if (v != best[idx]) cmp = v < best[idx] ? -1 : 1;
                    ++idx;
                    for (int j = i + 1; j < n && cmp == 0; ++j) {
                        i64 e = sign_of(i) * sign_of(j) * d.at(perm[i], perm[j]);
                        if (e != best[idx]) cmp = e < best[idx] ? -1 : 1;
                        ++idx;
                    }
                }
                if (cmp < 0) {
                    idx = 0;
                    for (int i = 0; i < n; ++i) {
                        best[idx++] = d.at(perm[i], perm[i]) / 2;
                        for (int j = i + 1; j < n; ++j)
                            best[idx++] = sign_of(i) * sign_of(j) * d.at(perm[i], perm[j]);
                    }
                    best_perm = perm;
                    best_signs = signs;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (best_p_out) {
        IMat p(n, n);
        for (int k = 0; k < n; ++k) {
            i64 s = (k > 0 && ((best_signs >> (k - 1)) & 1u)) ? -1 : 1;
            p.at(best_perm[k], k) = s;
        }
        *best_p_out = p;
    }
    return best;
}

}  // namespace

ReducedForm reduce(const QuadraticForm& q) {
    if (!q.positive_definite())
        throw std::invalid_argument("reduce: form not positive definite");
    const int n = q.vars();
    IMat d = q.doubled_gram();
    IMat u = IMat::identity(n);
    greedy_pair_reduce(d, u);
    IMat p;
    min_signed_perm(d, &p);
    IMat final_u = u * p;
    return {apply(q, final_u), UnimodularMap(final_u)};
}

std::vector<i64> reduction_key(const QuadraticForm& q) {
    IMat d = q.doubled_gram();
    IMat u(0, d.cols);
    greedy_pair_reduce(d, u);
    return min_signed_perm(d, nullptr);
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
    const int n = a.vars(), m = b.vars();
    IMat d(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = a.doubled_gram().at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) d.at(n + i, n + j) = b.doubled_gram().at(i, j);
    return QuadraticForm(d);
}

namespace {

// Backtracking isometry search between two reduced positive-definite forms.
std::optional<IMat> isometry_search(const QuadraticForm& f1, const QuadraticForm& f2) {
    const int n = f1.vars();
    const IMat& d1 = f1.doubled_gram();
    const IMat& d2 = f2.doubled_gram();
    i64 maxdiag = 0;
    for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, d2.at(i, i) / 2);

    auto c1 = vectors_up_to(f1, maxdiag);
    auto c2 = vectors_up_to(f2, maxdiag);
    // representation counts per value are equivalence invariants
    std::vector<i64> cnt1(maxdiag + 1, 0), cnt2(maxdiag + 1, 0);
    for (const auto& w : c1) ++cnt1[w.t];
    for (const auto& w : c2) ++cnt2[w.t];
    if (cnt1 != cnt2) return std::nullopt;

    // candidate vectors (both signs) with their D1-products, bucketed by value
    struct Cand {
        std::vector<i64> v;
        std::vector<i64> d1v;
    };
    std::vector<std::vector<Cand>> by_value(maxdiag + 1);
    for (const auto& w : c1) {
        for (int sign : {1, -1}) {
            Cand c;
            c.v.resize(n);
            for (int i = 0; i < n; ++i) c.v[i] = sign * w.vec[i];
            c.d1v.resize(n, 0);
            for (int i = 0; i < n; ++i) {
                i128 acc = 0;
                for (int j = 0; j < n; ++j) acc += i128(d1.at(i, j)) * c.v[j];
                c.d1v[i] = static_cast<i64>(acc);
            }
            by_value[w.t].push_back(std::move(c));
        }
    }

    std::vector<const Cand*> chosen;
    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == n) return true;
        i64 want = d2.at(k, k) / 2;
        if (want > maxdiag) return false;
        for (const Cand& c : by_value[want]) {
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                i128 dot = 0;
                for (int i = 0; i < n; ++i) dot += i128(c.d1v[i]) * chosen[j]->v[i];
                if (dot != i128(d2.at(j, k))) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(&c);
            if (dfs(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    IMat u(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) u.at(i, k) = chosen[k]->v[i];
    return u;
}

}  // namespace

std::optional<UnimodularMap> is_equivalent(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (q1.vars() != q2.vars()) throw std::invalid_argument("is_equivalent: dimension mismatch");
    if (!q1.positive_definite() || !q2.positive_definite())
        throw std::invalid_argument("is_equivalent: forms must be positive definite");
    if (q1.det_doubled() != q2.det_doubled()) return std::nullopt;

    ReducedForm r1 = reduce(q1);
    ReducedForm r2 = reduce(q2);
    IMat u2_inv = unimodular_inverse(r2.map.U);
    if (r1.form == r2.form) {
        UnimodularMap u(r1.map.U * u2_inv);
        if (!(apply(q1, u.U) == q2)) throw std::logic_error("equivalence witness failed");
        return u;
    }
    auto bridge = isometry_search(r1.form, r2.form);
    if (!bridge) return std::nullopt;
    UnimodularMap u(r1.map.U * *bridge * u2_inv);
    if (!(apply(q1, u.U) == q2)) throw std::logic_error("equivalence witness failed");
    return u;
}

MatchVerdict match_form(const QuadraticForm& q, const QuadraticForm& target) {
    if (q.vars() != target.vars()) throw std::invalid_argument("match_form: rank mismatch");
    bool identical = false;
    for_each_signed_permutation(q.vars(), [&](const IMat& p) {
        if (identical) return;
        if (p.transposed() * q.doubled_gram() * p == target.doubled_gram()) identical = true;
    });
    if (identical) return MatchVerdict::IdenticalUnderSignedPermutation;
    if (is_equivalent(q, target)) return MatchVerdict::Equivalent;
    return MatchVerdict::Distinct;
}

std::string to_string(MatchVerdict v) {
    switch (v) {
        case MatchVerdict::IdenticalUnderSignedPermutation: return "identical-under-signed-permutation";
        case MatchVerdict::Equivalent: return "equivalent";
        case MatchVerdict::Distinct: return "distinct";
    }
    return "?";
}

namespace {

std::vector<std::string> variable_names(int n) {
    std::vector<std::string> names;
    if (n == 4) names = {"w", "x", "y", "z"};
    else if (n >= 1 && n <= 3) {
        names = {"x", "y", "z"};
        names.resize(n);
    } else {
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

}  // namespace

std::string to_string(const QuadraticForm& q) {
    const int n = q.vars();
    auto names = variable_names(n);
    std::string out;
    bool first = true;
    auto emit = [&](i64 c, const std::string& mono) {
        if (c == 0) return;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
        }
        i64 a = std::abs(c);
        if (a != 1) out += std::to_string(a) + "*";
        out += mono;
    };
    for (int i = 0; i < n; ++i) {
        emit(q.coeff(i, i), names[i] + "^2");
        for (int j = i + 1; j < n; ++j) emit(q.coeff(i, j), names[i] + "*" + names[j]);
    }
    if (first) out = "0";
    return out;
}

QuadraticForm parse_form(const std::string& text) {
    struct Term {
        i64 c;
        std::string v1, v2;  // v2 empty means squared v1
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto parse_var = [&]() -> std::string {
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("form: expected variable");
        char c = text[i];
        if (c != 'w' && c != 'x' && c != 'y' && c != 'z')
            throw std::invalid_argument("form: bad variable");
        ++i;
        std::string name(1, c);
        while (i < text.size() && std::isdigit((unsigned char)text[i])) name += text[i++];
        return name;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        i64 sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("form: expected '+' or '-'");
        }
        first = false;
        skip_ws();
        i64 coeff = 1;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            std::string digits;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
            coeff = std::stoll(digits);
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; }
        }
        std::string v1 = parse_var();
        skip_ws();
        std::string v2;
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != '2') throw std::invalid_argument("form: only ^2 allowed");
            ++i;
        } else if (i < text.size() && text[i] == '*') {
            ++i;
            v2 = parse_var();
        } else {
            throw std::invalid_argument("form: term must be quadratic");
        }
        terms.push_back({sign * coeff, v1, v2});
    }
    if (terms.empty()) throw std::invalid_argument("form: empty");

    bool indexed = false, alias_w = false;
    for (const auto& t : terms)
        for (const std::string* v : {&t.v1, &t.v2}) {
            if (v->empty()) continue;
            if (v->size() > 1) indexed = true;
            if (*v == "w") alias_w = true;
        }
    auto var_index = [&](const std::string& v) -> int {
        if (v.size() > 1) {
            if (v[0] != 'x' || !indexed) throw std::invalid_argument("form: bad variable " + v);
            return std::stoi(v.substr(1)) - 1;
        }
        if (indexed) throw std::invalid_argument("form: mixed variable styles");
        static const std::string with_w = "wxyz", without_w = "xyz";
        const std::string& order = alias_w ? with_w : without_w;
        auto pos = order.find(v[0]);
        if (pos == std::string::npos) throw std::invalid_argument("form: bad variable " + v);
        return static_cast<int>(pos);
    };
    int n = 0;
    std::vector<std::array<i64, 3>> coeffs;
    for (const auto& t : terms) {
        int a = var_index(t.v1);
        int b = t.v2.empty() ? a : var_index(t.v2);
        if (a > b) std::swap(a, b);
        n = std::max(n, b + 1);
        coeffs.push_back({a, b, t.c});
    }
    return QuadraticForm::from_coeffs(n, coeffs);
}

}  // namespace hermitia
