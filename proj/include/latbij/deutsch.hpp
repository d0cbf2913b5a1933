#ifndef LATBIJ_DEUTSCH_HPP
#define LATBIJ_DEUTSCH_HPP

#include <string>
#include <vector>

#include "latbij/paths.hpp"

namespace latbij {

// One matching event: the downstep's leading unit pops up-unit number
// `up_index` (1-based, in path order) and absorbs `absorbed` blue down-units.
struct MatchStep {
    int up_index = 0;
    int absorbed = 0;

    friend auto operator<=>(const MatchStep&, const MatchStep&) = default;
};

using MatchTrace = std::vector<MatchStep>;

// Formats a step as "pop=<up-index> absorbed=<count>" for the CLI trace.
std::string format_step(const MatchStep& s);

// Expands long downsteps into unit downsteps (first plain, rest blue),
// colors the upsteps matched by blue down-units, then colors the upstep
// following each maximal run of those as its terminator.
ColoredUnitWord expand_color(const DeutschPath& p, MatchTrace* trace = nullptr);

// Collapses each phase-1 run plus its terminator into one wide upstep,
// keeps plain upsteps as width-1 upsteps, drops blue down-units.
RamirezPath contract(const ColoredUnitWord& w);

RamirezPath deutsch_forward(const DeutschPath& p, MatchTrace* trace = nullptr);

// Deterministic inverse: wide upsteps re-expand into needs-blue units under
// a needs-plain unit; a downstep pops its matching needs-plain unit and then
// absorbs needs-blue units from the stack top only while the next token is
// another downstep or the end of input.
DeutschPath deutsch_backward(const RamirezPath& q, MatchTrace* trace = nullptr);

}  // namespace latbij

#endif
