#include "steenrod2/action.hpp"

#include <mutex>
#include <tuple>

namespace st2 {

namespace {

void require_degree_one(const Poly& f) {
    const Algebra& a = *f.algebra();
    for (const auto& m : f.terms())
        for (const auto& [v, e] : m.factors())
            if (a.var(v).degree != 1)
                throw std::invalid_argument("steenrod action: variable " + a.var(v).name +
                                            " does not have degree 1");
}

// Sq^k on a single monomial. The total square turns x^e into
// sum over t with binom(e,t) odd of x^{e+t}; by Lucas, binom(e,t) is odd
// iff the bits of t are contained in those of e. We only need extra degree
// exactly k, so run a knapsack over the factors.
Poly sq_monomial(long long k, const AlgebraPtr& alg, const Monomial& m) {
    std::vector<Poly> dp(static_cast<std::size_t>(k) + 1, Poly::zero(alg));
    dp[0] = Poly::one(alg);
    for (const auto& [v, e] : m.factors()) {
        std::vector<Poly> next(static_cast<std::size_t>(k) + 1, Poly::zero(alg));
        for (long long t = 0; t <= k; ++t) {
            std::uint64_t tu = static_cast<std::uint64_t>(t);
            if ((tu & ~e) != 0) continue;  // binom(e,t) even
            Poly xp = Poly::from_monomial(
                alg, Monomial(Monomial::Factors{{v, checked_add(e, tu)}}));
            for (long long r = 0; r + t <= k; ++r) {
                if (dp[static_cast<std::size_t>(r)].is_zero()) continue;
                next[static_cast<std::size_t>(r + t)] += dp[static_cast<std::size_t>(r)] * xp;
            }
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(k)];
}

}  // namespace

Poly sq(long long k, const Poly& f) {
    if (k < 0) throw std::invalid_argument("sq: negative k");
    require_degree_one(f);
    if (k == 0) return f;
    Poly out(f.algebra());
    for (const auto& m : f.terms()) out += sq_monomial(k, f.algebra(), m);
    return out;
}

namespace {

using QKey = std::tuple<const Algebra*, int, Monomial::Factors>;
std::map<QKey, Poly> q_memo;   // guarded by q_mutex
std::mutex q_mutex;

Poly milnor_q_monomial(int i, const AlgebraPtr& alg, const Monomial& m) {
    QKey key{alg.get(), i, m.factors()};
    {
        std::lock_guard<std::mutex> lk(q_mutex);
        auto it = q_memo.find(key);
        if (it != q_memo.end()) return it->second;
    }
    Poly f = Poly::from_monomial(alg, m);
    Poly result(alg);
    if (i == 0) {
        result = sq(1, f);
    } else {
        long long s = 1LL << i;  // Sq^{2^i} in the commutator for Q_i
        result = sq(s, milnor_q(i - 1, f)) + milnor_q(i - 1, sq(s, f));
    }
    std::lock_guard<std::mutex> lk(q_mutex);
    q_memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

Poly milnor_q(int i, const Poly& f) {
    if (i < 0) throw std::invalid_argument("milnor_q: negative index");
    require_degree_one(f);
    Poly out(f.algebra());
    for (const auto& m : f.terms()) out += milnor_q_monomial(i, f.algebra(), m);
    return out;
}

}  // namespace st2
