#ifndef LATBIJ_SCHRODER_HPP
#define LATBIJ_SCHRODER_HPP

#include <vector>

#include "latbij/paths.hpp"

namespace latbij {

// Rewriting strategy. Both directions are confluent (tested exhaustively);
// leftmost is canonical.
enum class Strategy { leftmost, rightmost };

// One rewriting step: the marked entry at 1-based `pos` swapped with a
// neighbor, its value changing from `from` to `to`.
struct RewriteStep {
    int pos = 0;
    int from = 0;
    int to = 0;

    friend auto operator<=>(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

// Formats a step as "swap pos=<i> value=<h>→<h'>" for the CLI trace.
std::string format_step(const RewriteStep& s);

// Heights above y = -1 of the terminal points of the E and D steps, D marked.
// Requires a valid little path; the result is in raw form.
MarkedHeightSeq heights_of(const SchroderPath& p);

// Inverse of heights_of on raw-form sequences.
SchroderPath path_of_heights(const MarkedHeightSeq& m);

// Eliminates lonely marked entries (value >= predecessor + 2) by repeatedly
// swapping one left and decrementing it. Result is lonely-free.
MarkedHeightSeq normalize_lonely(MarkedHeightSeq m, Strategy strategy,
                                 RewriteTrace* trace = nullptr);

// Replaces each marked entry with 0. Requires lonely-free form.
GrowthSeq zero_out(const MarkedHeightSeq& m);

// Rebuilds the lonely-free marked sequence from a growth sequence: each zero
// becomes a marked entry one above its predecessor's value.
MarkedHeightSeq remark(const GrowthSeq& g);

// Eliminates offending marked entries (value > right neighbor) by repeatedly
// swapping one right and incrementing it. The fixed point must be raw form,
// otherwise the input was outside the bijection image.
MarkedHeightSeq normalize_offending(MarkedHeightSeq m, Strategy strategy,
                                    RewriteTrace* trace = nullptr);

GrowthSeq schroder_forward(const SchroderPath& p, RewriteTrace* trace = nullptr);
SchroderPath schroder_backward(const GrowthSeq& g, RewriteTrace* trace = nullptr);

}  // namespace latbij

#endif
