#ifndef LATBIJ_COUNT_HPP
#define LATBIJ_COUNT_HPP

#include <compare>
#include <cstdint>

#include "latbij/error.hpp"

namespace latbij {

// Exact nonnegative counter. Every arithmetic operation is overflow-checked;
// an overflow throws Errc::overflow instead of wrapping.
struct Count {
    std::uint64_t value = 0;

    friend auto operator<=>(const Count&, const Count&) = default;
};

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

// Binomial coefficient C(n, k); returns 0 for k > n. Overflow-checked.
Count binomial(std::uint64_t n, std::uint64_t k);

}  // namespace latbij

#endif
