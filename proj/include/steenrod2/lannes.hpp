#ifndef STEENROD2_LANNES_HPP
#define STEENROD2_LANNES_HPP

#include <cstdint>
#include <vector>

#include "steenrod2/opeval.hpp"

namespace st2 {

// dim Gamma^i(V_n) = C(n+i-1, i), with overflow checking.
unsigned long long gamma_dim(int n, long long i);

// Degreewise dimensions of T_V(F(p)) = sum_i Gamma^i(V_n) (x) F(p-i),
// through degree D.
std::vector<unsigned long long> tv_F_dims(long long p, int n, long long D);

// dim of the Boolean algebra F_2^{Gamma^p(V_n^#)} = 2^{C(n+p-1, p)};
// refuses exponents >= 64.
unsigned long long tv_HK_degree0(long long p, int n);

// dim of the Boolean algebra of functions on the kernel fiber of psi,
// 2^{|kernel_set(psi, n)|}; refuses kernels with >= 64 elements.
unsigned long long l2_zero_dim(const OperationClass& psi, int n);

}  // namespace st2

#endif
