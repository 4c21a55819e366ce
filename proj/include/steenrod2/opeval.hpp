#ifndef STEENROD2_OPEVAL_HPP
#define STEENROD2_OPEVAL_HPP

#include <set>
#include <vector>

#include "steenrod2/qform.hpp"
#include "steenrod2/steenrod.hpp"

namespace st2 {

// A cohomology class psi in H^p(K_q), given as a polynomial in the Serre
// generators. Only q = 2 evaluation is implemented (the source of every
// computation here); other q are rejected.
struct OperationClass {
    int q = 2;
    long long p = 0;        // target degree
    Poly expression;        // in the generators of a KnContext for K_q

    static OperationClass make(const KnContext& kq, Poly expr);
};

// Shared K_2 presentation used by operation evaluation; cap is the maximal
// class degree supported.
const KnContext& k2_context();

// Built-in aliases: d2 = i2*q0 + q1, h2 = i2^2*q1 + q0^3 + i2^3*q0.
Poly named_class(const std::string& name);
// Parse a class expression in the i2/q0/q1/... grammar with d2, h2 aliases.
Poly parse_class(std::string_view text);

// psi_*(s): substitute i2 -> s and q_i -> Q_i(s), then expand.
Poly evaluate(const OperationClass& psi, const QForm& s);

// All forms on V_n sent to zero by psi_*. n is capped (enumeration of
// 2^{n(n+1)/2} forms).
std::set<QForm> kernel_set(const OperationClass& psi, int n, int n_bound = 4);

// Per-dimension sets of forms closed under linear pullback.
struct SubfunctorWitness {
    int n_max = 0;
    std::vector<std::set<QForm>> by_dim;  // index d in 1..n_max

    const std::set<QForm>& at(int n) const { return by_dim.at(static_cast<std::size_t>(n) - 1); }
    bool operator==(const SubfunctorWitness& o) const {
        return n_max == o.n_max && by_dim == o.by_dim;
    }
};

using FormGenerators = std::vector<std::pair<int, QForm>>;

// Exhaustive pullback closure of the generators through dimension n_max.
SubfunctorWitness pullback_closure(const FormGenerators& gens, int n_max);
// Kernel subfunctor of psi through dimension n_max.
SubfunctorWitness kernel_witness(const OperationClass& psi, int n_max);

// True iff every stored form is a pullback of a listed generator.
bool generated_by(const SubfunctorWitness& witness, const FormGenerators& gens, int n_max);

// All monomials in {i2, q0, ..., q_k} of degree <= p_max whose kernel
// subfunctor equals the pullback closure of the target generators,
// for every dimension <= n_max.
std::vector<Poly> search_classes(long long p_max, const FormGenerators& target, int n_max);

}  // namespace st2

#endif
