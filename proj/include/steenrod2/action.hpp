#ifndef STEENROD2_ACTION_HPP
#define STEENROD2_ACTION_HPP

#include "steenrod2/poly.hpp"

namespace st2 {

// Steenrod squares and Milnor primitives acting on polynomial algebras whose
// variables all have degree 1 (H*(BV)). Heterogeneous inputs are processed
// per homogeneous component.

// Sq^k(f): the degree-(|f|+k) component of the total square, where the total
// square sends each degree-1 variable x to x + x^2.
Poly sq(long long k, const Poly& f);

// Milnor primitive Q_i, a derivation of degree 2^{i+1}-1.
// Q_0 = Sq^1, Q_{i+1} = Sq^{2^{i+1}} Q_i + Q_i Sq^{2^{i+1}}.
Poly milnor_q(int i, const Poly& f);

}  // namespace st2

#endif
