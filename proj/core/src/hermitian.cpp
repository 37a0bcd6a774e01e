#include "hermitia/hermitian.hpp"

#include <sstream>
#include <stdexcept>

namespace hermitia {

IMat trace_gram_doubled(const FieldParams& field,
                        const std::vector<std::vector<AlgebraicInteger>>& gram) {
    const int k = static_cast<int>(gram.size());
    const AlgebraicInteger w = omega(field);
    IMat d(2 * k, 2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int s = 0; s < 2; ++s)
                for (int r = 0; r < 2; ++r) {
                    AlgebraicInteger h = gram[i][j];
                    if (s) h = w * h;             // H(w*g_i, g_j) = w * h_ij
                    if (r) h = h * conj(w);       // H(g_i, w*g_j) = conj(w) * h_ij
                    Zint t = trace(h);
                    if (t > INT64_MAX || t < INT64_MIN)
                        throw std::overflow_error("trace Gram entry out of range");
                    d.at(2 * i + s, 2 * j + r) = static_cast<i64>(t);
                }
    return d;
}

HermitianLattice make_lattice(const FieldParams& field,
                              std::vector<std::vector<AlgebraicInteger>> gram,
                              std::string label) {
    const std::size_t k = gram.size();
    if (k == 0) throw std::invalid_argument("make_lattice: empty Gram");
    for (const auto& row : gram)
        if (row.size() != k) throw std::invalid_argument("make_lattice: Gram not square");
    for (std::size_t i = 0; i < k; ++i) {
        if (!(gram[i][i].field == field))
            throw std::invalid_argument("make_lattice: entry from a different field");
        if (gram[i][i].b != 0 || gram[i][i].a < 0)
            throw std::invalid_argument("make_lattice: diagonal must be a nonnegative rational integer");
        for (std::size_t j = 0; j < k; ++j) {
            if (!(gram[i][j].field == field))
                throw std::invalid_argument("make_lattice: entry from a different field");
            if (!(gram[j][i] == conj(gram[i][j])))
                throw std::invalid_argument("make_lattice: Gram not conjugate-symmetric");
        }
    }
    IMat tg = trace_gram_doubled(field, gram);
    SymInfo info = analyze_symmetric(tg);
    if (!info.psd)
        throw std::invalid_argument("make_lattice: indefinite presentation");
    if (info.rank % 2 != 0)
        throw std::logic_error("make_lattice: odd trace rank");
    HermitianLattice L;
    L.field = field;
    L.gram = std::move(gram);
    L.label = std::move(label);
    L.rank = info.rank / 2;
    return L;
}

HermitianLattice diagonal_lattice(const FieldParams& field, const std::vector<i64>& diag,
                                  std::string label) {
    std::vector<std::vector<AlgebraicInteger>> g(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = 0; j < diag.size(); ++j)
            g[i].push_back(make_int(field, i == j ? diag[i] : 0));
    }
    return make_lattice(field, std::move(g), std::move(label));
}

Zint evaluate(const HermitianLattice& L, const std::vector<AlgebraicInteger>& x) {
    const std::size_t k = L.gram.size();
    if (x.size() != k) throw std::invalid_argument("evaluate: dimension mismatch");
    AlgebraicInteger acc = make_int(L.field, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            acc = acc + L.gram[i][j] * x[i] * conj(x[j]);
    if (acc.b != 0) throw std::logic_error("evaluate: non-rational Hermitian value");
    return acc.a;
}

HermitianLattice orthogonal_sum(const HermitianLattice& a, const HermitianLattice& b) {
    if (!(a.field == b.field)) throw std::invalid_argument("orthogonal_sum: mixed fields");
    const std::size_t n = a.gram.size(), m = b.gram.size();
    std::vector<std::vector<AlgebraicInteger>> g(n + m);
    for (std::size_t i = 0; i < n + m; ++i)
        g[i].assign(n + m, make_int(a.field, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    std::string label = a.label.empty() || b.label.empty() ? std::string{} : a.label + "+" + b.label;
    return make_lattice(a.field, std::move(g), std::move(label));
}

namespace {

std::string diag_label(i64 m, const std::vector<i64>& d) {
    std::string s = "Qm" + std::to_string(m) + ":<";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ">";
}

// <1> perp [[2, e], [conj(e), c]] with the singular 2x2 block printed in the
// classification table; e is w or -1+w.
HermitianLattice nonfree_entry(i64 m, i64 e_a, i64 c) {
    FieldParams f = make_field(m);
    AlgebraicInteger e = make_int(f, e_a, 1);
    std::vector<std::vector<AlgebraicInteger>> g{
        {make_int(f, 1), make_int(f, 0), make_int(f, 0)},
        {make_int(f, 0), make_int(f, 2), e},
        {make_int(f, 0), conj(e), make_int(f, c)},
    };
    std::string label = "Qm" + std::to_string(m) + ":<1>perp[2," +
                        (e_a == 0 ? "w" : std::to_string(e_a) + "+w") + "," + std::to_string(c) + "]";
    return make_lattice(f, std::move(g), std::move(label));
}

std::vector<HermitianLattice> build_catalog() {
    std::vector<HermitianLattice> cat;
    auto diag = [&](i64 m, i64 d2) {
        FieldParams f = make_field(m);
        cat.push_back(diagonal_lattice(f, {1, d2}, diag_label(m, {1, d2})));
    };
    diag(1, 1); diag(1, 2); diag(1, 3);
    diag(2, 1); diag(2, 2); diag(2, 3); diag(2, 4); diag(2, 5);
    diag(3, 1); diag(3, 2);
    diag(5, 2);
    cat.push_back(nonfree_entry(5, -1, 3));
    cat.push_back(nonfree_entry(6, 0, 3));
    diag(7, 1); diag(7, 2); diag(7, 3);
    cat.push_back(nonfree_entry(10, 0, 5));
    diag(11, 1); diag(11, 2);
    cat.push_back(nonfree_entry(15, 0, 2));
    diag(19, 2);
    cat.push_back(nonfree_entry(23, 0, 3));
    cat.push_back(nonfree_entry(23, -1, 3));
    cat.push_back(nonfree_entry(31, 0, 4));
    cat.push_back(nonfree_entry(31, -1, 4));
    return cat;
}

}  // namespace

const std::vector<HermitianLattice>& catalog() {
    static const std::vector<HermitianLattice> cat = build_catalog();
    return cat;
}

std::string to_string(const HermitianLattice& L) {
    std::string s = "m=" + std::to_string(L.field.m) + ":[";
    for (std::size_t i = 0; i < L.gram.size(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < L.gram[i].size(); ++j) {
            if (j) s += ",";
            s += to_string(L.gram[i][j]);
        }
    }
    return s + "]";
}

HermitianLattice parse_lattice(const std::string& text) {
    for (const HermitianLattice& L : catalog())
        if (L.label == text) return L;
    auto fail = [&] { throw std::invalid_argument("bad lattice syntax: " + text); };
    auto mpos = text.find("m=");
    if (mpos == std::string::npos) fail();
    auto colon = text.find(':', mpos);
    if (colon == std::string::npos) fail();
    i64 m = std::stoll(text.substr(mpos + 2, colon - mpos - 2));
    FieldParams f = make_field(m);
    auto lb = text.find('[', colon);
    auto rb = text.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb <= lb) fail();
    std::string body = text.substr(lb + 1, rb - lb - 1);
    std::vector<std::vector<AlgebraicInteger>> gram;
    std::stringstream rows(body);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<AlgebraicInteger> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(parse_algebraic(cell, f));
        gram.push_back(std::move(r));
    }
    return make_lattice(f, std::move(gram));
}

}  // namespace hermitia
