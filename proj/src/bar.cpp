#include "steenrod2/bar.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <mutex>

#include "steenrod2/gf2.hpp"
#include "steenrod2/invariants.hpp"

namespace st2 {

namespace {

std::vector<std::vector<Monomial>> degree_bases(const AlgebraPtr& a, long long D) {
    std::vector<std::vector<Monomial>> out;
    for (long long d = 0; d <= D; ++d) {
        DegreeBasis b(a, d);
        std::vector<Monomial> ms;
        for (std::size_t i = 0; i < b.size(); ++i) ms.push_back(b.at(i));
        out.push_back(std::move(ms));
    }
    return out;
}

// Images of positive-degree base monomials in the module, memoized: this is
// the cost hotspot of the whole complex.
class ActionCache {
public:
    ActionCache(const AlgebraTruncation&, const ModuleTruncation& mod) : mod_(mod) {}

    Poly image(const Monomial& b) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(b.factors());
        if (it != memo_.end()) return it->second;
        Poly img = Poly::one(mod_.alg);
        for (const auto& [v, e] : b.factors()) img *= mod_.gen_images[static_cast<std::size_t>(v)].pow(e);
        memo_.emplace(b.factors(), img);
        return img;
    }

private:
    const ModuleTruncation& mod_;
    std::map<Monomial::Factors, Poly> memo_;
    std::mutex mu_;
};

void toggle(BarChain& c, BarKey k) {
    auto it = c.find(k);
    if (it != c.end())
        c.erase(it);
    else
        c.insert(std::move(k));
}

BarChain d_key(const ModuleTruncation& mod, ActionCache& cache, const BarKey& key) {
    const auto& [mf, word] = key;
    BarChain out;
    std::size_t s = word.size();
    if (s == 0) return out;
    Poly mp = Poly::from_monomial(mod.alg, Monomial(mf)) * cache.image(Monomial(word[0]));
    std::vector<Monomial::Factors> rest(word.begin() + 1, word.end());
    for (const Monomial& term : mp.terms()) toggle(out, {term.factors(), rest});
    for (std::size_t i = 0; i + 1 < s; ++i) {
        std::vector<Monomial::Factors> contracted;
        contracted.reserve(s - 1);
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i)
                contracted.push_back(Monomial(word[i]).times(Monomial(word[i + 1])).factors());
            else if (j != i + 1)
                contracted.push_back(word[j]);
        }
        toggle(out, {mf, std::move(contracted)});
    }
    return out;
}

struct Slice {
    std::vector<BarKey> keys;
    std::map<BarKey, std::size_t> index;
};

Slice build_slice(const AlgebraTruncation& alg, const ModuleTruncation& mod, long long s, long long t) {
    Slice sl;
    std::vector<Monomial::Factors> word;
    std::function<void(long long, long long)> rec = [&](long long pos, long long left) {
        if (pos == s) {
            if (left < 0 || left > mod.D) return;
            for (const Monomial& m : mod.basis[static_cast<std::size_t>(left)]) {
                BarKey k{m.factors(), word};
                sl.index.emplace(k, sl.keys.size());
                sl.keys.push_back(std::move(k));
            }
            return;
        }
        for (long long d = 1; d <= left; ++d) {
            if (d > alg.D) break;
            for (const Monomial& a : alg.basis[static_cast<std::size_t>(d)]) {
                word.push_back(a.factors());
                rec(pos + 1, left - d);
                word.pop_back();
            }
        }
    };
    rec(0, t);
    return sl;
}

}  // namespace

std::pair<AlgebraTruncation, ModuleTruncation> build_truncations(int p, const OperationClass* psi,
                                                                 long long D) {
    if (p < 2) throw std::invalid_argument("build_truncations: need p >= 2");
    if (D < 0 || D > 40)
        throw resource_error("build_truncations: degree cap " + std::to_string(D) + " out of range");
    AlgebraTruncation alg;
    alg.p = p;
    alg.D = D;
    alg.ctx = std::make_shared<const KnContext>(p, std::max<long long>(D, p));
    alg.basis = degree_bases(alg.ctx->algebra(), D);

    ModuleTruncation mod;
    mod.D = D;
    if (psi == nullptr) {
        mod.alg = Algebra::make({});
        mod.gen_images.assign(alg.ctx->generators().size(), Poly(mod.alg));
    } else {
        if (psi->p != p)
            throw std::invalid_argument("build_truncations: class degree " + std::to_string(psi->p) +
                                        " does not match p = " + std::to_string(p));
        const KnContext& k2 = k2_context();
        mod.alg = k2.algebra();
        for (const Word& I : alg.ctx->generators())
            mod.gen_images.push_back(k2.act_on_K(I, psi->expression));
    }
    mod.basis = degree_bases(mod.alg, D);
    return {std::move(alg), std::move(mod)};
}

BarChain bar_d(const AlgebraTruncation& alg, const ModuleTruncation& mod, const BarChain& x) {
    ActionCache cache(alg, mod);
    BarChain out;
    for (const BarKey& k : x)
        for (const BarKey& kk : d_key(mod, cache, k)) toggle(out, kk);
    return out;
}

BarChain shuffle_product(const BarChain& x, const BarChain& y, const ModuleTruncation& mod) {
    BarChain out;
    for (const BarKey& kx : x)
        for (const BarKey& ky : y) {
            if (kx.second.size() != 1 || ky.second.size() != 1)
                throw std::invalid_argument("shuffle_product: expected one-column chains");
            Monomial m = Monomial(kx.first).times(Monomial(ky.first));
            toggle(out, {m.factors(), {kx.second[0], ky.second[0]}});
            toggle(out, {m.factors(), {ky.second[0], kx.second[0]}});
        }
    return out;
}

TorTable bar_tor(const AlgebraTruncation& alg, const ModuleTruncation& mod, long long S) {
    if (S < 0 || S > 20) throw resource_error("bar_tor: column cap out of range");
    TorTable table;
    table.p = alg.p;
    table.D = alg.D;
    table.S = S;

    ActionCache cache(alg, mod);
    std::mutex table_mu;

    auto compute_t = [&](long long t) {
        std::vector<Slice> slices;
        for (long long s = 0; s <= S + 1; ++s) slices.push_back(build_slice(alg, mod, s, t));
        std::vector<long long> ranks(static_cast<std::size_t>(S) + 2, 0);
        for (long long s = 1; s <= S + 1; ++s) {
            const Slice& src = slices[static_cast<std::size_t>(s)];
            const Slice& dst = slices[static_cast<std::size_t>(s - 1)];
            std::vector<BitVec> rows;
            for (const BarKey& k : src.keys) {
                BarChain dk = d_key(mod, cache, k);
                BitVec row(dst.keys.size());
                for (const BarKey& kk : dk) row.flip(dst.index.at(kk));
                rows.push_back(std::move(row));
                // d o d = 0 at every computed bidegree
                if (s >= 2) {
                    BarChain dd;
                    for (const BarKey& kk : dk)
                        for (const BarKey& k3 : d_key(mod, cache, kk)) toggle(dd, k3);
                    if (!dd.empty()) throw std::logic_error("bar_tor: differential does not square to zero");
                }
            }
            ranks[static_cast<std::size_t>(s)] = static_cast<long long>(gf2_rank(std::move(rows)));
        }
        std::lock_guard<std::mutex> lock(table_mu);
        for (long long s = 0; s <= S; ++s) {
            long long chain = static_cast<long long>(slices[static_cast<std::size_t>(s)].keys.size());
            table.chain_dims[{s, t}] = chain;
            table.dims[{s, t}] =
                chain - ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s + 1)];
        }
    };

    std::vector<std::future<void>> jobs;
    for (long long t = 0; t <= alg.D; ++t)
        jobs.push_back(std::async(std::launch::async, compute_t, t));
    for (auto& j : jobs) j.get();
    return table;
}

TorTable bar_tor(int p, const OperationClass* psi, long long D, long long S) {
    auto [alg, mod] = build_truncations(p, psi, D);
    return bar_tor(alg, mod, S);
}

LoopCollapseReport loop_collapse_check(int p, long long D, long long n_max) {
    LoopCollapseReport rep;
    TorTable table = bar_tor(p, nullptr, D, D / p);
    for (long long n = 0; n <= n_max; ++n) {
        long long total = 0;
        for (long long s = 0; n + s <= D && s <= table.S; ++s) total += table.at(s, n + s);
        rep.totals.push_back(total);
    }
    std::vector<long long> gen_degrees;
    if (p == 2) {
        gen_degrees = {1};  // K_1 = K(Z/2, 1), H* = F2[u]
    } else {
        KnContext fiber(p - 1, std::max<long long>(n_max, p - 1));
        for (std::size_t v = 0; v < fiber.algebra()->size(); ++v)
            gen_degrees.push_back(fiber.algebra()->var(static_cast<int>(v)).degree);
    }
    for (auto d : free_algebra_dims(gen_degrees, n_max)) rep.expected.push_back(static_cast<long long>(d));
    rep.ok = rep.totals == rep.expected;
    return rep;
}

bool connectivity_check(const TorTable& table) {
    for (const auto& [st, dim] : table.dims)
        if (st.second <= st.first - 1 && dim != 0) return false;
    return true;
}

}  // namespace st2
