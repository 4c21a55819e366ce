#include "steenrod2/qform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "steenrod2/gf2.hpp"

namespace st2 {

namespace {

int bit_rank(std::vector<std::uint32_t> rows) {
    int r = 0;
    for (int b = 0; b < 32; ++b) {
        std::size_t piv = rows.size();
        for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
            if ((rows[i] >> b) & 1) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(r) && ((rows[i] >> b) & 1))
                rows[i] ^= rows[static_cast<std::size_t>(r)];
        ++r;
    }
    return r;
}

// Nullspace basis of the map x -> (row_i . x)_i on F2^n.
std::vector<std::uint32_t> nullspace(std::vector<std::uint32_t> rows, int n) {
    // track column operations on an identity tableau
    std::vector<std::uint32_t> id(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) id[static_cast<std::size_t>(j)] = 1u << j;
    // column echelon: columns indexed by j, column j of matrix = bits rows[i]>>j
    std::vector<bool> used_row(rows.size(), false);
    std::vector<bool> pivot_col(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (!pivot_col[static_cast<std::size_t>(j)] && ((rows[i] >> j) & 1)) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        pivot_col[static_cast<std::size_t>(pc)] = true;
        for (int j = 0; j < n; ++j) {
            if (j == pc || !((rows[i] >> j) & 1)) continue;
            // column j += column pc, in every row and in the tableau
            for (std::size_t r = 0; r < rows.size(); ++r)
                if ((rows[r] >> pc) & 1) rows[r] ^= 1u << j;
            id[static_cast<std::size_t>(j)] ^= id[static_cast<std::size_t>(pc)];
        }
    }
    std::vector<std::uint32_t> out;
    for (int j = 0; j < n; ++j)
        if (!pivot_col[static_cast<std::size_t>(j)]) out.push_back(id[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace

const std::vector<LinMap>& gl_matrices(int n) {
    if (n < 1 || n > 4) throw resource_error("gl_matrices: n must be in 1..4");
    static std::array<std::vector<LinMap>, 5> cache;
    auto& out = cache[static_cast<std::size_t>(n)];
    if (!out.empty()) return out;
    std::uint64_t total = 1ULL << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        LinMap m{n, n, {}};
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            std::uint32_t c = static_cast<std::uint32_t>((code >> (n * j)) & ((1u << n) - 1));
            m.col.push_back(c);
            for (int i = 0; i < n; ++i)
                if ((c >> i) & 1) rows[static_cast<std::size_t>(i)] |= 1u << j;
        }
        if (bit_rank(rows) == n) out.push_back(std::move(m));
    }
    return out;
}

QForm::QForm(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > 7) throw std::invalid_argument("QForm: dimension out of range");
    if (n < 7 && bits >= (1u << coeff_count(n))) throw std::invalid_argument("QForm: stray coefficient bits");
}

int QForm::idx(int i, int j) const {
    // row-major upper triangular
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

bool QForm::coeff(int i, int j) const {
    if (i > j) std::swap(i, j);
    return (bits_ >> idx(i, j)) & 1;
}

bool QForm::eval(std::uint32_t x) const {
    bool v = false;
    for (int i = 0; i < n_; ++i) {
        if (!((x >> i) & 1)) continue;
        for (int j = i; j < n_; ++j)
            if (((x >> j) & 1) && coeff(i, j)) v = !v;
    }
    return v;
}

bool QForm::bilinear(std::uint32_t x, std::uint32_t y) const {
    return eval(x ^ y) != (eval(x) != eval(y));
}

QForm QForm::pullback(const LinMap& phi) const {
    if (phi.rows != n_) throw std::invalid_argument("pullback: dimension mismatch");
    QForm out(phi.cols, 0);
    for (int j = 0; j < phi.cols; ++j) {
        std::uint32_t ej = phi.col[static_cast<std::size_t>(j)];
        if (eval(ej)) out.bits_ |= 1u << out.idx(j, j);
        for (int k = j + 1; k < phi.cols; ++k)
            if (bilinear(ej, phi.col[static_cast<std::size_t>(k)])) out.bits_ |= 1u << out.idx(j, k);
    }
    return out;
}

int QForm::polar_rank() const {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && bilinear(1u << i, 1u << j)) rows[static_cast<std::size_t>(i)] |= 1u << j;
    return bit_rank(rows);
}

std::vector<std::uint32_t> QForm::radical_basis() const {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && bilinear(1u << i, 1u << j)) rows[static_cast<std::size_t>(i)] |= 1u << j;
    return nullspace(rows, n_);
}

bool QForm::defective() const {
    // q is additive on the radical, so it vanishes there iff it vanishes on a basis
    for (std::uint32_t r : radical_basis())
        if (eval(r)) return true;
    return false;
}

int QForm::arf() const {
    if (defective()) throw std::invalid_argument("arf: form is defective");
    int r = polar_rank();
    if (r == 0) return 0;  // the zero form on V/radical
    long long zeros = 0;
    for (std::uint32_t x = 0; x < (1u << n_); ++x)
        if (!eval(x)) ++zeros;
    long long split_count = (1LL << (n_ - 1)) + (1LL << (n_ - r / 2 - 1));
    return zeros == split_count ? 0 : 1;
}

int QForm::arf_by_reduction() const {
    if (defective()) throw std::invalid_argument("arf_by_reduction: form is defective");
    // Peel off hyperbolic pairs; what remains spans the radical.
    std::vector<std::uint32_t> vecs;
    for (int i = 0; i < n_; ++i) vecs.push_back(1u << i);
    int arf = 0;
    while (true) {
        std::size_t xi = vecs.size(), yi = vecs.size();
        for (std::size_t i = 0; i < vecs.size() && xi == vecs.size(); ++i)
            for (std::size_t j = i + 1; j < vecs.size(); ++j)
                if (bilinear(vecs[i], vecs[j])) {
                    xi = i;
                    yi = j;
                    break;
                }
        if (xi == vecs.size()) break;
        std::uint32_t x = vecs[xi], y = vecs[yi];
        if (eval(x) && eval(y)) arf ^= 1;
        std::vector<std::uint32_t> rest;
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            if (k == xi || k == yi) continue;
            std::uint32_t z = vecs[k];
            if (bilinear(z, y)) z ^= x;
            if (bilinear(z, x)) z ^= y;
            rest.push_back(z);
        }
        vecs = std::move(rest);
    }
    return arf;
}

AlgebraPtr form_algebra(int n) {
    static std::map<int, AlgebraPtr> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Variable> vars;
    if (n <= 3) {
        const char* names[] = {"u", "v", "w"};
        for (int i = 0; i < n; ++i) vars.push_back({names[i], 1});
    } else {
        for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i + 1), 1});
    }
    return cache[n] = Algebra::make(std::move(vars));
}

Poly QForm::to_poly(const AlgebraPtr& a) const {
    if (static_cast<int>(a->size()) != n_)
        throw std::invalid_argument("to_poly: algebra dimension mismatch");
    Poly p(a);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (coeff(i, j)) p += Poly::var(a, i) * Poly::var(a, j);
    return p;
}

QForm QForm::from_poly(const Poly& p) {
    const Algebra& a = *p.algebra();
    int n = static_cast<int>(a.size());
    QForm out(n, 0);
    for (const Monomial& m : p.terms()) {
        if (m.degree(a) != 2) throw std::invalid_argument("from_poly: not a quadratic form");
        const auto& f = m.factors();
        int i, j;
        if (f.size() == 1) i = j = f[0].first;
        else i = f[0].first, j = f[1].first;
        out.bits_ ^= 1u << out.idx(i, j);
    }
    return out;
}

std::string QForm::str() const { return to_poly(form_algebra(n_)).str(); }

QForm parse_form(int n, std::string_view text) {
    return QForm::from_poly(parse_poly(form_algebra(n), text));
}

std::string FormClass::label() const {
    std::string s = "rank=" + std::to_string(rank);
    if (defective) s += ";defective";
    else s += ";arf=" + std::to_string(*arf);
    return s;
}

FormClass classify(const QForm& q) {
    int n = q.dim();
    if (n < 1 || n > 4) throw resource_error("classify: dimension must be in 1..4");
    std::uint32_t best = q.bits();
    for (const LinMap& g : gl_matrices(n)) best = std::min(best, q.pullback(g).bits());
    FormClass fc;
    fc.rank = q.polar_rank();
    fc.defective = q.defective();
    if (!fc.defective) fc.arf = q.arf();
    fc.representative = QForm(n, best);
    return fc;
}

std::vector<std::pair<FormClass, std::size_t>> orbit_census(int n) {
    if (n < 1 || n > 4) throw resource_error("orbit_census: dimension must be in 1..4");
    std::uint32_t total = 1u << QForm::coeff_count(n);
    std::vector<bool> seen(total, false);
    std::vector<std::pair<FormClass, std::size_t>> out;
    const auto& gl = gl_matrices(n);
    for (std::uint32_t b = 0; b < total; ++b) {
        if (seen[b]) continue;
        QForm q(n, b);
        std::set<std::uint32_t> orbit;
        for (const LinMap& g : gl) orbit.insert(q.pullback(g).bits());
        for (std::uint32_t o : orbit) seen[o] = true;
        FormClass fc;
        fc.rank = q.polar_rank();
        fc.defective = q.defective();
        if (!fc.defective) fc.arf = q.arf();
        fc.representative = QForm(n, *orbit.begin());
        out.emplace_back(std::move(fc), orbit.size());
    }
    return out;
}

}  // namespace st2
