#include "latbij/deutsch.hpp"

#include "latbij/error.hpp"

namespace latbij {

std::string format_step(const MatchStep& s) {
    return "pop=" + std::to_string(s.up_index) +
           " absorbed=" + std::to_string(s.absorbed);
}

ColoredUnitWord expand_color(const DeutschPath& p, MatchTrace* trace) {
    auto violations = validate(p);
    if (!violations.empty()) fail(Errc::invariant, violations.front());

    ColoredUnitWord w;
    std::vector<std::size_t> stack;  // unit indices of unmatched upsteps
    std::vector<int> up_ordinal;     // per unit, 1-based among upsteps
    int ups = 0;

    for (int tok : p.tokens) {
        if (tok == 0) {
            stack.push_back(w.units.size());
            w.units.push_back(UnitKind::up_plain);
            up_ordinal.push_back(++ups);
            continue;
        }
        // one plain unit, then tok-1 blue units whose matches turn phase-1
        w.units.push_back(UnitKind::down_plain);
        up_ordinal.push_back(0);
        std::size_t matched = stack.back();
        stack.pop_back();
        if (trace) trace->push_back({up_ordinal[matched], tok - 1});
        for (int b = 1; b < tok; ++b) {
            w.units.push_back(UnitKind::down_blue);
            up_ordinal.push_back(0);
            w.units[stack.back()] = UnitKind::up_phase1;
            stack.pop_back();
        }
    }

    // terminator pass: the unit after each maximal phase-1 run
    for (std::size_t i = 0; i < w.units.size(); ++i) {
        if (w.units[i] != UnitKind::up_phase1) continue;
        std::size_t r = i;
        while (r < w.units.size() && w.units[r] == UnitKind::up_phase1) ++r;
        if (r >= w.units.size() || w.units[r] != UnitKind::up_plain)
            fail(Errc::assertion, "run follower not a plain upstep");
        w.units[r] = UnitKind::up_terminator;
        i = r;
    }
    return w;
}

RamirezPath contract(const ColoredUnitWord& w) {
    auto violations = validate(w);
    if (!violations.empty()) fail(Errc::invariant, violations.front());

    RamirezPath q;
    for (std::size_t i = 0; i < w.units.size(); ++i) {
        switch (w.units[i]) {
            case UnitKind::up_plain:
                q.tokens.push_back(1);
                break;
            case UnitKind::up_phase1: {
                int run = 0;
                while (w.units[i] == UnitKind::up_phase1) {
                    ++run;
                    ++i;
                }
                // validate() guarantees the terminator is here
                q.tokens.push_back(run + 1);
                break;
            }
            case UnitKind::down_plain:
                q.tokens.push_back(0);
                break;
            case UnitKind::down_blue:
            case UnitKind::up_terminator:
                break;  // terminator consumed by its run above
        }
    }
    return q;
}

RamirezPath deutsch_forward(const DeutschPath& p, MatchTrace* trace) {
    return contract(expand_color(p, trace));
}

DeutschPath deutsch_backward(const RamirezPath& q, MatchTrace* trace) {
    enum class Need : char { plain, blue };
    struct Pending {
        Need need;
        int ordinal;
    };

    DeutschPath p;
    std::vector<Pending> stack;
    int ups = 0;

    for (std::size_t t = 0; t < q.tokens.size(); ++t) {
        int tok = q.tokens[t];
        if (tok < 0) fail(Errc::inversion_failure, "invalid token");
        if (tok > 0) {
            for (int k = 1; k < tok; ++k) {
                stack.push_back({Need::blue, ++ups});
                p.tokens.push_back(0);
            }
            stack.push_back({Need::plain, ++ups});
            p.tokens.push_back(0);
            continue;
        }
        if (stack.empty())
            fail(Errc::inversion_failure, "stack empty at downstep");
        if (stack.back().need == Need::blue)
            fail(Errc::inversion_failure, "downstep matches blue upstep");
        int popped = stack.back().ordinal;
        stack.pop_back();
        int absorbed = 0;
        bool absorb = (t + 1 == q.tokens.size()) || (q.tokens[t + 1] == 0);
        if (absorb) {
            while (!stack.empty() && stack.back().need == Need::blue) {
                stack.pop_back();
                ++absorbed;
            }
        }
        if (trace) trace->push_back({popped, absorbed});
        p.tokens.push_back(1 + absorbed);
    }
    if (!stack.empty())
        fail(Errc::inversion_failure, "unmatched upsteps remain");
    return p;
}

}  // namespace latbij
