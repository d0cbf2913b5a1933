#ifndef LATBIJ_VERIFY_HPP
#define LATBIJ_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "latbij/count.hpp"
#include "latbij/enumerate.hpp"

namespace latbij {

// Every per-element check (round trips, codomain membership, confluence)
// runs through one kernel that exists in two interchangeable flavors: a
// serial reference and an OpenMP-parallel version. Results are identical;
// tests compare them and the bench target times them.
enum class ExecMode { serial, parallel };

namespace detail {

// The kernel itself: evaluates probe(0..n) and returns the nonempty results
// in index order. The parallel flavor gathers per-thread hit lists and
// re-sorts them, so its output is byte-identical to the serial reference.
// Probes must not throw.
std::vector<std::string> collect_failures(
    std::size_t n, ExecMode mode,
    const std::function<std::string(std::size_t)>& probe);

}  // namespace detail

enum class BijectionId { schroder, kimberling, deutsch };

BijectionId bijection_from_name(const std::string& name);
const char* bijection_name(BijectionId id);

// n for schroder/deutsch, (i, j) for kimberling; b is -1 when unused.
struct SizeKey {
    int a = 0;
    int b = -1;

    friend auto operator<=>(const SizeKey&, const SizeKey&) = default;
};

std::string size_label(SizeKey key);

struct SizeReport {
    SizeKey key;
    Count domain_count;
    Count codomain_count;
    std::vector<std::string> round_trip_failures;
    std::vector<std::string> codomain_violations;
    std::vector<std::string> confluence_mismatches;
    std::vector<std::string> count_mismatches;

    bool pass() const;
};

struct Report {
    std::string bijection;
    std::string bounds;
    std::vector<SizeReport> sizes;
    double elapsed_seconds = 0.0;

    bool pass() const;
};

struct VerifyBounds {
    int max_a = 5;   // n bound, or i bound for kimberling
    int max_b = -1;  // j bound for kimberling
    // kimberling only: verify the triangle i+j <= max_a instead of the full
    // rectangle (the shape of the reference triangle read by antidiagonals)
    bool antidiagonal = false;
};

// Enumerates both sides at every size within bounds, maps every element
// through forward and backward, and records all discrepancies.
Report check_bijection(BijectionId id, VerifyBounds bounds,
                       ExecMode mode = ExecMode::parallel,
                       const Limits& lim = {});

// Leftmost vs rightmost normalization over every raw marked height sequence
// of length <= max_n, both for the lonely and the offending rewriting, plus
// the offending-inverts-lonely round trip.
Report check_confluence(int max_n, ExecMode mode = ExecMode::parallel,
                        const Limits& lim = {});

// Reference-count ingestion, b-file style: whitespace-separated "n value" or
// "i j value" lines, '#' starts a comment.
struct RefCount {
    SizeKey key;
    Count value;
};

std::vector<RefCount> read_count_file(const std::string& path);

// Compares enumerated/closed-form counts against a reference file; only
// lines with indices within the bounds are checked.
Report crosscheck_counts(Family family, VerifyBounds bounds,
                         const std::string& path, const Limits& lim = {});

// Merge of reports over disjoint size shards; associative and
// order-independent (sizes are reordered by key), elapsed times add.
Report merge_reports(Report a, const Report& b);

std::string to_text(const Report& r);
std::string to_json(const Report& r);

}  // namespace latbij

#endif
