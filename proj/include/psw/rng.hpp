#ifndef PSW_RNG_HPP
#define PSW_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace psw {

// All randomized sweeps take an explicit seed so reported numbers reproduce.
using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng);
}

// k distinct values from 0..n-1, sorted
inline std::vector<int> rand_subset(Rng& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = static_cast<int>(rand_int(rng, i, n - 1));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace psw

#endif
