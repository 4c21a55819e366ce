#include "steenrod2/lannes.hpp"

#include "steenrod2/steenrod.hpp"

namespace st2 {

namespace {

unsigned long long checked_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (long long j = 1; j <= k; ++j) {
        // r * (n - k + j) / j stays integral at every step
        unsigned long long num = static_cast<unsigned long long>(n - k + j);
        r = checked_mul(r, num) / static_cast<unsigned long long>(j);
    }
    return r;
}

}  // namespace

unsigned long long gamma_dim(int n, long long i) {
    if (n < 0 || i < 0) throw std::invalid_argument("gamma_dim: negative argument");
    if (i == 0) return 1;
    if (n == 0) return 0;
    return checked_binomial(n + i - 1, i);
}

std::vector<unsigned long long> tv_F_dims(long long p, int n, long long D) {
    if (p < 1 || n < 0 || D < 0) throw std::invalid_argument("tv_F_dims: need p >= 1, n >= 0, D >= 0");
    std::vector<unsigned long long> out(static_cast<std::size_t>(D) + 1, 0);
    for (long long i = 0; i <= p; ++i) {
        unsigned long long g = gamma_dim(n, i);
        if (g == 0) continue;
        std::vector<long long> f = f_dims(static_cast<int>(p - i), D);
        for (long long d = 0; d <= D; ++d)
            out[static_cast<std::size_t>(d)] = checked_add(
                out[static_cast<std::size_t>(d)],
                checked_mul(g, static_cast<unsigned long long>(f[static_cast<std::size_t>(d)])));
    }
    return out;
}

unsigned long long tv_HK_degree0(long long p, int n) {
    if (p < 1 || n < 0) throw std::invalid_argument("tv_HK_degree0: need p >= 1, n >= 0");
    unsigned long long e = gamma_dim(n, p);
    if (e >= 64)
        throw resource_error("tv_HK_degree0: Boolean algebra dimension 2^" + std::to_string(e) +
                             " exceeds the representable cap");
    return 1ULL << e;
}

unsigned long long l2_zero_dim(const OperationClass& psi, int n) {
    std::size_t k = kernel_set(psi, n).size();
    if (k >= 64)
        throw resource_error("l2_zero_dim: kernel has " + std::to_string(k) +
                             " elements, dimension exceeds the representable cap");
    return 1ULL << k;
}

}  // namespace st2
