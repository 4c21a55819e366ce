#ifndef STEENROD2_INVARIANTS_HPP
#define STEENROD2_INVARIANTS_HPP

#include <vector>

#include "steenrod2/gf2.hpp"
#include "steenrod2/poly.hpp"
#include "steenrod2/qform.hpp"

namespace st2 {

// Basis of the degree-d part of a polynomial algebra, with coordinates.
class DegreeBasis {
public:
    DegreeBasis(AlgebraPtr a, long long d);
    std::size_t size() const { return monos_.size(); }
    const Monomial& at(std::size_t i) const { return monos_[i]; }
    BitVec coords(const Poly& p) const;  // p must be homogeneous of degree d (or zero)
private:
    AlgebraPtr alg_;
    long long d_;
    std::vector<Monomial> monos_;
    std::map<std::vector<std::pair<int, std::uint64_t>>, std::size_t> index_;
};

// Pullback of a linear substitution x_j -> sum_i m_ij x_i on a polynomial
// algebra in degree-1 variables (the matrix acts by its columns).
Poly linear_substitute(const Poly& p, const LinMap& m);

// dim of the G-fixed subspace in each degree <= D, G generated by the given
// invertible matrices acting on n degree-1 variables.
std::vector<long long> invariant_ring_dims(const std::vector<LinMap>& group_gens, int n, long long D);

// dim of the degree-d span of all products of the generators, d <= D.
std::vector<long long> subalgebra_dims(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                       long long D);
// Echelon bases of those spans per degree (degree 0 omitted handling: index d).
std::vector<RowSpace> subalgebra_spans(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                       long long D);

// Nil-closure (closure under products and square roots, degreewise) of the
// span generated by the given homogeneous elements, through degree D.
std::vector<RowSpace> nil_closure_spans(const AlgebraPtr& ambient, const std::vector<Poly>& gens,
                                        long long D);

// The Milnor-image generators of H_2 and the Stiefel-Whitney generators give
// the same nil-closed subalgebra through degree D. (As bare product spans the
// two differ: w1^2 w2 is not a product of the Milnor generators, only its
// square is; the comparison is between nil-closures.)
bool h2_two_descriptions_check(long long D);

// Standard generator lists inside F2[u,v].
std::vector<Poly> dickson_generators();
std::vector<Poly> h2_generators(int count = 4);
// w2, w1 w2, w1^2 w2, ... up to degree D (w1 = u+v, w2 = uv).
std::vector<Poly> h2_sw_generators(long long D);

// Fiber product of D(2) and H_2 over F2[u] along the diagonal restrictions
// v -> u; dimension per degree <= D.
std::vector<long long> m2_dims(long long D);

struct NormDegreeReport {
    long long degree = 0;
    bool kernel_is_symmetric_algebra = false;
    long long quotient_dim = 0;  // dim ker(1+tau*) / im(1+tau*)
    bool parity_ok = false;      // quotient dim 1 in even, 0 in odd degrees
};

// Checks on the Z/2 norm sequence F2[w1,w2] -> F2[u,v] --1+tau*--> F2[u,v].
std::vector<NormDegreeReport> norm_sequence_check(long long D);

// Graded dimensions of F2[u]/F2[u^2]: 1 in odd degrees, 0 in even.
std::vector<long long> ext_witness_dims(long long D);

}  // namespace st2

#endif
