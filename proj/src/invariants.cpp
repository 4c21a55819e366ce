#include "steenrod2/invariants.hpp"

#include <algorithm>
#include <functional>

namespace st2 {

namespace {

void enumerate_monomials(const Algebra& a, long long d, std::size_t v, Monomial::Factors& cur,
                         std::vector<Monomial>& out) {
    if (v == a.size()) {
        if (d == 0) out.push_back(Monomial(cur));
        return;
    }
    long long dv = a.var(static_cast<int>(v)).degree;
    for (long long e = 0; e * dv <= d; ++e) {
        if (e > 0) cur.emplace_back(static_cast<int>(v), static_cast<std::uint64_t>(e));
        enumerate_monomials(a, d - e * dv, v + 1, cur, out);
        if (e > 0) cur.pop_back();
    }
}

}  // namespace

DegreeBasis::DegreeBasis(AlgebraPtr a, long long d) : alg_(std::move(a)), d_(d) {
    Monomial::Factors cur;
    enumerate_monomials(*alg_, d, 0, cur, monos_);
    std::sort(monos_.begin(), monos_.end(), [](const Monomial& x, const Monomial& y) { return x.before(y); });
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i].factors()] = i;
}

BitVec DegreeBasis::coords(const Poly& p) const {
    BitVec v(monos_.size());
    if (p.is_zero()) return v;
    if (p.algebra().get() != alg_.get()) throw std::invalid_argument("coords: wrong algebra");
    for (const Monomial& m : p.terms()) {
        auto it = index_.find(m.factors());
        if (it == index_.end()) throw std::invalid_argument("coords: monomial not of degree " + std::to_string(d_));
        v.flip(it->second);
    }
    return v;
}

Poly linear_substitute(const Poly& p, const LinMap& m) {
    const AlgebraPtr& a = p.algebra();
    if (static_cast<int>(a->size()) != m.rows || m.rows != m.cols)
        throw std::invalid_argument("linear_substitute: shape mismatch");
    std::map<int, Poly> images;
    for (int j = 0; j < m.cols; ++j) {
        Poly img(a);
        for (int i = 0; i < m.rows; ++i)
            if ((m.col[static_cast<std::size_t>(j)] >> i) & 1) img += Poly::var(a, i);
        images[j] = img;
    }
    return substitute(p, a, images);
}

std::vector<long long> invariant_ring_dims(const std::vector<LinMap>& group_gens, int n, long long D) {
    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i + 1), 1});
    AlgebraPtr a = Algebra::make(std::move(vars));

    // reject singular generators up front
    for (const LinMap& g : group_gens) {
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if ((g.col[static_cast<std::size_t>(j)] >> i) & 1) rows[static_cast<std::size_t>(i)] |= 1u << j;
        RowSpace sp;
        int r = 0;
        for (auto row : rows) {
            BitVec v(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                if ((row >> j) & 1) v.set(static_cast<std::size_t>(j));
            if (sp.add(std::move(v))) ++r;
        }
        if (r != n) throw std::invalid_argument("invariant_ring_dims: singular group generator");
    }

    std::vector<long long> dims;
    for (long long d = 0; d <= D; ++d) {
        DegreeBasis basis(a, d);
        // stack (g^* - id) over all generators; fixed space = common kernel
        std::size_t dim = basis.size();
        // build combined matrix rows = images of basis vectors, one block per generator
        // kernel computed by rank of the stacked transformation on coordinates
        std::vector<std::vector<BitVec>> blocks;
        for (const LinMap& g : group_gens) {
            std::vector<BitVec> rows;
            for (std::size_t i = 0; i < dim; ++i) {
                Poly xi = Poly::from_monomial(a, basis.at(i));
                BitVec img = basis.coords(linear_substitute(xi, g) + xi);
                rows.push_back(std::move(img));
            }
            blocks.push_back(std::move(rows));
        }
        // columns of the stacked map live in (dim * #gens)-space; compute rank
        // of the map v -> ((g*-1)v)_g by eliminating on input vectors
        std::vector<BitVec> stacked;
        for (std::size_t i = 0; i < dim; ++i) {
            BitVec row(dim * blocks.size());
            for (std::size_t b = 0; b < blocks.size(); ++b)
                for (std::size_t c = 0; c < dim; ++c)
                    if (blocks[b][i].get(c)) row.set(b * dim + c);
            stacked.push_back(std::move(row));
        }
        long long rank = static_cast<long long>(gf2_rank(std::move(stacked)));
        dims.push_back(static_cast<long long>(dim) - rank);
    }
    return dims;
}

std::vector<RowSpace> subalgebra_spans(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                       long long D) {
    for (const Poly& g : gens) {
        long long d = -1;
        if (!g.homogeneous(&d) || g.is_zero())
            throw std::invalid_argument("subalgebra_spans: generators must be nonzero homogeneous");
    }
    std::vector<DegreeBasis> bases;
    for (long long d = 0; d <= D; ++d) bases.emplace_back(ambient, d);
    std::vector<RowSpace> spans(static_cast<std::size_t>(D) + 1);
    // all monomials in the generators of total degree <= D
    std::function<void(std::size_t, Poly, long long)> rec = [&](std::size_t v, Poly acc, long long d) {
        spans[static_cast<std::size_t>(d)].add(bases[static_cast<std::size_t>(d)].coords(acc));
        if (acc.is_zero()) return;
        for (std::size_t w = v; w < gens.size(); ++w) {
            long long dw = -1;
            gens[w].homogeneous(&dw);
            if (d + dw > D) continue;
            rec(w, acc * gens[w], d + dw);
        }
    };
    rec(0, Poly::one(ambient), 0);
    return spans;
}

std::vector<long long> subalgebra_dims(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                       long long D) {
    std::vector<long long> dims;
    for (const RowSpace& sp : subalgebra_spans(ambient, gens, D))
        dims.push_back(static_cast<long long>(sp.rank()));
    return dims;
}

std::vector<Poly> dickson_generators() {
    AlgebraPtr a = form_algebra(2);
    return {parse_poly(a, "u^2 + u*v + v^2"), parse_poly(a, "u^2*v + u*v^2")};
}

std::vector<Poly> h2_generators(int count) {
    AlgebraPtr a = form_algebra(2);
    Poly u = Poly::var(a, 0), v = Poly::var(a, 1);
    std::vector<Poly> gens{u * v};
    for (int k = 1; k < count; ++k) {
        std::uint64_t e = (1ULL << k) - 1;
        gens.push_back(u * v * (u.pow(e) + v.pow(e)));
    }
    return gens;
}

std::vector<Poly> h2_sw_generators(long long D) {
    AlgebraPtr a = form_algebra(2);
    Poly w1 = Poly::var(a, 0) + Poly::var(a, 1);
    Poly w2 = Poly::var(a, 0) * Poly::var(a, 1);
    std::vector<Poly> gens;
    for (long long k = 0; 2 + k <= D; ++k) gens.push_back(w1.pow(static_cast<std::uint64_t>(k)) * w2);
    return gens;
}

std::vector<RowSpace> nil_closure_spans(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                        long long D) {
    std::vector<RowSpace> spans = subalgebra_spans(ambient, gens, D);
    std::vector<DegreeBasis> bases;
    for (long long d = 0; d <= D; ++d) bases.emplace_back(ambient, d);

    auto to_poly = [&](long long d, const BitVec& row) {
        Poly p(ambient);
        const DegreeBasis& b = bases[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (row.get(i)) p += Poly::from_monomial(ambient, b.at(i));
        return p;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // square roots: x with x^2 in the degree-2d span (Frobenius is linear)
        for (long long d = 1; 2 * d <= D; ++d) {
            const DegreeBasis& bd = bases[static_cast<std::size_t>(d)];
            const RowSpace& target = spans[static_cast<std::size_t>(2 * d)];
            // residual of each squared basis monomial modulo the target span
            std::vector<std::pair<BitVec, BitVec>> ech;  // (residual, combination tag)
            std::vector<BitVec> kernel_tags;
            for (std::size_t i = 0; i < bd.size(); ++i) {
                Poly sq = Poly::from_monomial(ambient, bd.at(i)).square();
                BitVec main = bases[static_cast<std::size_t>(2 * d)].coords(sq);
                for (const BitVec& r : target.rows()) {
                    std::size_t p = r.lowest();
                    if (p < main.size() && main.get(p)) main ^= r;
                }
                BitVec tag(bd.size());
                tag.set(i);
                for (const auto& [m, t] : ech) {
                    std::size_t p = m.lowest();
                    if (p < main.size() && main.get(p)) {
                        main ^= m;
                        tag ^= t;
                    }
                }
                if (main.zero())
                    kernel_tags.push_back(std::move(tag));
                else
                    ech.emplace_back(std::move(main), std::move(tag));
            }
            for (BitVec& t : kernel_tags)
                if (spans[static_cast<std::size_t>(d)].add(std::move(t))) changed = true;
        }
        if (!changed) continue;
        // re-close under products
        for (long long d1 = 1; d1 <= D; ++d1)
            for (long long d2 = d1; d1 + d2 <= D; ++d2) {
                auto rows1 = spans[static_cast<std::size_t>(d1)].rows();
                auto rows2 = spans[static_cast<std::size_t>(d2)].rows();
                for (const BitVec& r1 : rows1)
                    for (const BitVec& r2 : rows2) {
                        Poly prod = to_poly(d1, r1) * to_poly(d2, r2);
                        if (spans[static_cast<std::size_t>(d1 + d2)].add(
                                bases[static_cast<std::size_t>(d1 + d2)].coords(prod)))
                            changed = true;
                    }
            }
    }
    return spans;
}

bool h2_two_descriptions_check(long long D) {
    AlgebraPtr a = form_algebra(2);
    // internal headroom so square roots at degree <= D see their squares
    long long cap = 4 * D;
    std::vector<Poly> milnor_gens;
    for (const Poly& g : h2_generators(16))
        if (g.degree() <= cap) milnor_gens.push_back(g);

    auto milnor = nil_closure_spans(a, milnor_gens, cap);
    auto sw = subalgebra_spans(a, h2_sw_generators(D), D);
    for (long long d = 0; d <= D; ++d) {
        const auto& s1 = milnor[static_cast<std::size_t>(d)];
        const auto& s2 = sw[static_cast<std::size_t>(d)];
        if (s1.rank() != s2.rank()) return false;
        for (const BitVec& r : s1.rows())
            if (!s2.contains(r)) return false;
    }
    return true;
}

namespace {

// diagonal restriction F2[u,v] -> F2[u], v -> u; on the degree-d part the
// target is one-dimensional, so the image of p is its term count mod 2.
bool diagonal_restriction_nonzero(const Poly& p) {
    return p.terms().size() % 2 == 1;
}

}  // namespace

std::vector<long long> m2_dims(long long D) {
    AlgebraPtr a = form_algebra(2);
    auto d_spans = subalgebra_spans(a, dickson_generators(), D);
    // H_2 is nil-closed; the Stiefel-Whitney generators give it directly
    auto h_spans = subalgebra_spans(a, h2_sw_generators(D), D);
    std::vector<DegreeBasis> bases;
    for (long long d = 0; d <= D; ++d) bases.emplace_back(a, d);

    std::vector<long long> dims;
    for (long long d = 0; d <= D; ++d) {
        const auto& A = d_spans[static_cast<std::size_t>(d)];
        const auto& B = h_spans[static_cast<std::size_t>(d)];
        // pairs (x, y) with rho(x) = rho(y); rank of the combined map to F2[u]_d
        std::vector<BitVec> combined;
        const DegreeBasis& basis = bases[static_cast<std::size_t>(d)];
        auto rho_bit = [&](const BitVec& coords) {
            // reconstruct term count parity from the coordinate vector
            bool bit = false;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (coords.get(i)) bit = !bit;
            return bit;
        };
        std::size_t rank = 0;
        bool image_nonzero = false;
        for (const BitVec& r : A.rows()) image_nonzero |= rho_bit(r);
        for (const BitVec& r : B.rows()) image_nonzero |= rho_bit(r);
        rank = image_nonzero ? 1 : 0;
        dims.push_back(static_cast<long long>(A.rank() + B.rank()) - static_cast<long long>(rank));
    }
    return dims;
}

std::vector<NormDegreeReport> norm_sequence_check(long long D) {
    AlgebraPtr a = form_algebra(2);
    Poly u = Poly::var(a, 0), v = Poly::var(a, 1);
    LinMap tau{2, 2, {2u, 1u}};  // swap u, v
    auto sym_spans = subalgebra_spans(a, {u + v, u * v}, D);

    std::vector<NormDegreeReport> out;
    for (long long d = 0; d <= D; ++d) {
        DegreeBasis basis(a, d);
        std::vector<BitVec> nrows;  // 1 + tau^* on the degree-d part
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Poly xi = Poly::from_monomial(a, basis.at(i));
            nrows.push_back(basis.coords(xi + linear_substitute(xi, tau)));
        }
        // kernel of N
        RowSpace image;
        for (const BitVec& r : nrows) image.add(r);
        long long rank = static_cast<long long>(image.rank());
        long long ker_dim = static_cast<long long>(basis.size()) - rank;

        // the symmetric subalgebra sits inside the kernel; equality iff dims match
        const RowSpace& sym = sym_spans[static_cast<std::size_t>(d)];
        bool sym_in_kernel = true;
        for (const BitVec& s : sym.rows()) {
            // apply N to s and check zero
            Poly p(a);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (s.get(i)) p += Poly::from_monomial(a, basis.at(i));
            if (!(p + linear_substitute(p, tau)).is_zero()) sym_in_kernel = false;
        }
        NormDegreeReport rep;
        rep.degree = d;
        rep.kernel_is_symmetric_algebra = sym_in_kernel && (static_cast<long long>(sym.rank()) == ker_dim);
        // N has square zero here (N tau = N), so im N is inside ker N
        rep.quotient_dim = ker_dim - rank;
        rep.parity_ok = rep.quotient_dim == (d % 2 == 0 ? 1 : 0);
        out.push_back(rep);
    }
    return out;
}

std::vector<long long> ext_witness_dims(long long D) {
    // F2[u]/F2[u^2] per degree, computed as a literal quotient of spans
    AlgebraPtr a = Algebra::make({Variable{"u", 1}});
    Poly u = Poly::var(a, 0);
    auto sub_spans = subalgebra_spans(a, {u * u}, D);
    std::vector<long long> out;
    for (long long d = 0; d <= D; ++d) {
        long long full = 1;  // F2[u] is one-dimensional in every degree
        out.push_back(full - static_cast<long long>(sub_spans[static_cast<std::size_t>(d)].rank()));
    }
    return out;
}

}  // namespace st2
