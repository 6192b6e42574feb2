#include "quintic/schubert.hpp"

#include <sstream>

#include "quintic/error.hpp"

namespace quintic {

SchubertRing::SchubertRing(int n) : n_(n) {
    if (n < 3) throw StructureError("SchubertRing needs n >= 3");
    const int top = n - 2;
    index_.assign(static_cast<size_t>(top) + 1, std::vector<int>(static_cast<size_t>(top) + 1, -1));
    for (int total = 0; total <= 2 * top; ++total)  // graded, then lex within a degree
        for (int a = top; a >= 0; --a) {
            int b = total - a;
            if (b < 0 || b > a) continue;
            index_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<int>(basis_.size());
            basis_.emplace_back(a, b);
        }
}

int SchubertRing::index_of(int a, int b) const {
    if (b < 0 || a < b || a > max_part())
        throw StructureError("no Schubert class s(" + std::to_string(a) + "," +
                             std::to_string(b) + ") on G(2," + std::to_string(n_) + ")");
    return index_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

SchubertRing::Elt SchubertRing::sigma(int a, int b) const {
    Elt e = zero();
    e[static_cast<size_t>(index_of(a, b))] = 1;
    return e;
}

SchubertRing::Elt SchubertRing::multiply_special(int k, const Elt& x) const {
    if (k < 0) throw StructureError("Pieri with negative special class");
    if (k == 0) return x;
    Elt out = zero();
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (x[i] == 0) continue;
        auto [c, d] = basis_[i];
        for (int f = d; f <= c; ++f) {
            int e = c + d + k - f;
            if (e < c || e > max_part()) continue;
            out[static_cast<size_t>(index_of(e, f))] += x[i];
        }
    }
    return out;
}

SchubertRing::Elt SchubertRing::multiply_sigma11(const Elt& x) const {
    Elt out = zero();
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (x[i] == 0) continue;
        auto [c, d] = basis_[i];
        if (c + 1 <= max_part()) out[static_cast<size_t>(index_of(c + 1, d + 1))] += x[i];
    }
    return out;
}

SchubertRing::Elt SchubertRing::multiply(const Elt& x, const Elt& y) const {
    if (static_cast<int>(x.size()) != basis_size() || static_cast<int>(y.size()) != basis_size())
        throw StructureError("Schubert element size mismatch");
    Elt out = zero();
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (y[i] == 0) continue;
        auto [a, b] = basis_[i];
        // s(a,b) = s(1,1)^b * s(a-b)
        Elt term = multiply_special(a - b, x);
        for (int rep = 0; rep < b; ++rep) term = multiply_sigma11(term);
        for (size_t j = 0; j < out.size(); ++j) out[j] += y[i] * term[j];
    }
    return out;
}

std::int64_t SchubertRing::integrate(const Elt& x) const {
    return x.at(static_cast<size_t>(index_of(max_part(), max_part())));
}

std::string SchubertRing::to_string(const Elt& x) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (x[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << x[i] << "*s(" << basis_[i].first << "," << basis_[i].second << ")";
    }
    return first ? "0" : os.str();
}

namespace {

/// Dense symmetric polynomial in two Chern roots, c[i][j] * x1^i x2^j.
using Roots2 = std::vector<std::vector<std::int64_t>>;

Roots2 roots_one() { return {{1}}; }

/// Multiply by the linear form u*x1 + v*x2.
Roots2 roots_mul_linear(const Roots2& p, std::int64_t u, std::int64_t v) {
    Roots2 out(p.size() + 1, std::vector<std::int64_t>(p.empty() ? 1 : p[0].size() + 1, 0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j) {
            if (p[i][j] == 0) continue;
            out[i + 1][j] += u * p[i][j];
            out[i][j + 1] += v * p[i][j];
        }
    return out;
}

/// Rewrite a symmetric polynomial in the elementary basis: returns pairs
/// (j, coeff) with p = sum coeff * e1^{deg-2j} e2^j.  Uses leading-term
/// elimination; a leftover non-symmetric part throws StructureError.
std::vector<std::pair<int, std::int64_t>> to_elementary(Roots2 p, int deg) {
    std::vector<std::pair<int, std::int64_t>> out;
    for (int j = 0; j <= deg / 2; ++j) {  // lex-leading first: term x1^{deg-j} x2^j
        std::int64_t c = 0;
        if (static_cast<size_t>(deg - j) < p.size() &&
            static_cast<size_t>(j) < p[static_cast<size_t>(deg - j)].size())
            c = p[static_cast<size_t>(deg - j)][static_cast<size_t>(j)];
        if (c == 0) continue;
        // subtract c * e1^{deg-2j} e2^j = c * (x1+x2)^{deg-2j} (x1 x2)^j
        Roots2 sub = roots_one();
        for (int r = 0; r < deg - 2 * j; ++r) sub = roots_mul_linear(sub, 1, 1);
        for (size_t i = 0; i < sub.size(); ++i)
            for (size_t jj = 0; jj < sub[i].size(); ++jj) {
                if (sub[i][jj] == 0) continue;
                size_t xi = i + static_cast<size_t>(j), xj = jj + static_cast<size_t>(j);
                p[xi][xj] -= c * sub[i][jj];
            }
        out.emplace_back(j, c);
    }
    for (const auto& row : p)
        for (std::int64_t v : row)
            if (v != 0) throw StructureError("polynomial in Chern roots is not symmetric");
    return out;
}

}  // namespace

std::int64_t symmetric_power_top_chern(int n, int k) {
    SchubertRing ring(n);
    if (k + 1 != ring.dimension())
        throw StructureError("Sym^" + std::to_string(k) + " S* has rank " + std::to_string(k + 1) +
                             ", not the dimension " + std::to_string(ring.dimension()) + " of G(2," +
                             std::to_string(n) + ")");
    Roots2 chern = roots_one();
    for (int i = 0; i <= k; ++i) chern = roots_mul_linear(chern, i, k - i);
    SchubertRing::Elt total = ring.zero();
    for (const auto& [j, c] : to_elementary(std::move(chern), k + 1)) {
        SchubertRing::Elt term = ring.one();
        for (int r = 0; r < k + 1 - 2 * j; ++r) term = ring.multiply_special(1, term);
        for (int r = 0; r < j; ++r) term = ring.multiply_sigma11(term);
        for (size_t i = 0; i < total.size(); ++i) total[i] += c * term[i];
    }
    return ring.integrate(total);
}

std::int64_t count_lines_on_quintic() { return symmetric_power_top_chern(5, 5); }

std::int64_t count_lines_on_cubic_surface() { return symmetric_power_top_chern(4, 3); }

std::int64_t plucker_degree_g25() {
    SchubertRing ring(5);
    SchubertRing::Elt e = ring.one();
    for (int r = 0; r < ring.dimension(); ++r) e = ring.multiply_special(1, e);
    return ring.integrate(e);
}

}  // namespace quintic
