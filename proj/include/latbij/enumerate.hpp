#ifndef LATBIJ_ENUMERATE_HPP
#define LATBIJ_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latbij/count.hpp"
#include "latbij/paths.hpp"

namespace latbij {

// Per-call ceiling on generated objects; exceeding it raises ResourceLimit.
// The CLI overrides the default through LATTICEBIJ_MAX_OBJECTS.
struct Limits {
    std::uint64_t max_objects = 10'000'000;
};

// Exhaustive generators. Emission order is deterministic and lexicographic
// per family:
//   little Schroder  step words with E < D < N
//   growth-seq       numeric, zero smallest
//   kimberling       vertex sequences, pointwise (x,y)
//   bounded-seq      numeric
//   deutsch          token words with U < 1 < 2 < ...
//   ramirez          token words with D < 1 < 2 < ...
std::vector<SchroderPath> enum_little_schroder(int n, const Limits& lim = {});
std::vector<GrowthSeq> enum_growth_sequences(int n, const Limits& lim = {});
std::vector<KimberlingPath> enum_kimberling(int i, int j, const Limits& lim = {});
std::vector<BoundedSeq> enum_bounded_sequences(int i, int j, const Limits& lim = {});
std::vector<DeutschPath> enum_deutsch(int n, const Limits& lim = {});
std::vector<RamirezPath> enum_ramirez(int n, const Limits& lim = {});

// Number of Kimberling paths to (i,j) with exactly k interior vertices:
// C(i-1,k) * C(j+k,k).
Count kimberling_count_by_interior(int i, int j, int k);

enum class Family {
    little_schroder,
    growth_seq,
    kimberling,
    bounded_seq,
    deutsch,
    ramirez,
};

// Accepts the hyphenated names used by the CLI ("little-schroder",
// "growth-seq", ...); "schroder" is an alias for little-schroder.
Family family_from_name(const std::string& name);
const char* family_name(Family f);
bool family_is_two_param(Family f);

// Exact cardinality of the family at the given size. Kimberling uses the
// closed form; the other families walk the same search tree as their
// enumerator without materializing objects. For one-parameter families b is
// ignored.
Count count(Family f, int a, int b = 0, const Limits& lim = {});

}  // namespace latbij

#endif
