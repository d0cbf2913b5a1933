#include "latbij/count.hpp"

namespace latbij {

Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a.value, b.value, &r.value))
        fail(Errc::overflow, "count addition overflows 64 bits");
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a.value, b.value, &r.value))
        fail(Errc::overflow, "count multiplication overflows 64 bits");
    return r;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Count{0};
    if (k > n - k) k = n - k;
    Count r{1};
    // r * (n-k+i) stays divisible by i, so the division below is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, Count{n - k + i});
        r.value /= i;
    }
    return r;
}

}  // namespace latbij
