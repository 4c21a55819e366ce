#ifndef STEENROD2_BAR_HPP
#define STEENROD2_BAR_HPP

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "steenrod2/opeval.hpp"
#include "steenrod2/steenrod.hpp"

namespace st2 {

// H*(K_p) through degree D: the polynomial algebra on the Serre generators,
// with per-degree monomial bases.
struct AlgebraTruncation {
    int p = 0;
    long long D = 0;
    std::shared_ptr<const KnContext> ctx;
    std::vector<std::vector<Monomial>> basis;  // index = degree, 0..D
};

// The module over H*(K_p): H*(K_2) pulled back along psi (generator g = Sq^I
// iota_p acts by multiplication with Sq^I(psi)), or F_2 when trivial.
struct ModuleTruncation {
    long long D = 0;
    AlgebraPtr alg;  // K_2 presentation, or the empty algebra for F_2
    std::vector<Poly> gen_images;  // image of each base generator in alg
    std::vector<std::vector<Monomial>> basis;
};

// psi == nullptr builds the trivial module; otherwise psi->p must equal p.
std::pair<AlgebraTruncation, ModuleTruncation> build_truncations(int p, const OperationClass* psi,
                                                                 long long D);

struct TorTable {
    int p = 0;
    long long D = 0;
    long long S = 0;
    std::map<std::pair<long long, long long>, long long> dims;        // (s, t) -> dim Tor^{-s,t}
    std::map<std::pair<long long, long long>, long long> chain_dims;  // (s, t) -> dim B_{s,t}

    long long at(long long s, long long t) const {
        auto it = dims.find({s, t});
        return it == dims.end() ? 0 : it->second;
    }
};

// Homology of the reduced bar complex B_s = M (x) A~^{(x)s} in bidegrees
// s <= S, t <= D, with a d o d = 0 assertion at every computed bidegree.
TorTable bar_tor(const AlgebraTruncation& alg, const ModuleTruncation& mod, long long S);
TorTable bar_tor(int p, const OperationClass* psi, long long D, long long S);

// One reduced bar chain, kept as a set of basis keys (coefficients in F_2):
// (module monomial, list of positive-degree base monomials).
using BarKey = std::pair<Monomial::Factors, std::vector<Monomial::Factors>>;
using BarChain = std::set<BarKey>;

// Bar differential of a single chain (all keys must have the same s).
BarChain bar_d(const AlgebraTruncation& alg, const ModuleTruncation& mod, const BarChain& x);

// Shuffle product of two one-column chains, landing in column two.
BarChain shuffle_product(const BarChain& x, const BarChain& y, const ModuleTruncation& mod);

struct LoopCollapseReport {
    bool ok = false;
    std::vector<long long> totals;    // sum_s dim Tor^{-s, n+s}, n = 0..n_max
    std::vector<long long> expected;  // dim H^n(K_{p-1})
};

// Path-loop fibration check: the trivial-module Tor totals per total degree
// n = t - s reproduce the Poincare series of H*(K_{p-1}).
LoopCollapseReport loop_collapse_check(int p, long long D, long long n_max);

// dims(s, t) = 0 whenever t <= s - 1, over everything the table stores.
bool connectivity_check(const TorTable& table);

}  // namespace st2

#endif
