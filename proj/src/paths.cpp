#include "latbij/paths.hpp"

#include <algorithm>

namespace latbij {

namespace {

void add_once(std::vector<std::string>& out, const std::string& clause) {
    if (std::find(out.begin(), out.end(), clause) == out.end())
        out.push_back(clause);
}

}  // namespace

int SchroderPath::semilength() const {
    int n = 0;
    for (char c : steps)
        if (c == 'E' || c == 'D') ++n;
    return n;
}

bool SchroderPath::little() const {
    int x = 0, y = 0;
    for (char c : steps) {
        if (c == 'D' && x == y) return false;
        if (c == 'E') ++x;
        else if (c == 'N') ++y;
        else { ++x; ++y; }
    }
    return true;
}

int RamirezPath::size() const {
    int s = 0;
    for (int t : tokens) s += (t == 0) ? 1 : t;
    return s;
}

std::vector<std::string> validate(const SchroderPath& p) {
    std::vector<std::string> out;
    int x = 0, y = 0;
    int e = 0, n = 0;
    for (char c : p.steps) {
        switch (c) {
            case 'E': ++x; ++e; break;
            case 'N': ++y; ++n; break;
            case 'D':
                if (x == y) add_once(out, "D starts on diagonal");
                ++x; ++y;
                break;
            default:
                add_once(out, "invalid step letter");
                continue;
        }
        if (y > x) add_once(out, "rises above diagonal");
    }
    if (e != n) add_once(out, "does not end on the diagonal");
    return out;
}

std::vector<std::string> validate(const MarkedHeightSeq& m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const auto& h = m.entries[i];
        if (i == 0 && (h.value != 1 || h.marked))
            add_once(out, "first entry not an unmarked 1");
        if (h.value < 1) add_once(out, "entry value below 1");
        if (h.value > static_cast<int>(i) + 1)
            add_once(out, "entry value exceeds its position");
    }
    return out;
}

std::vector<std::string> raw_violations(const MarkedHeightSeq& m) {
    std::vector<std::string> out = validate(m);
    for (std::size_t i = 1; i < m.entries.size(); ++i) {
        int prev = m.entries[i - 1].value;
        int cur = m.entries[i].value;
        if (cur < prev) add_once(out, "values not weakly increasing");
        if (m.entries[i].marked && cur <= prev)
            add_once(out, "no strict increase into marked entry");
    }
    return out;
}

std::vector<std::string> lonely_free_violations(const MarkedHeightSeq& m) {
    std::vector<std::string> out = validate(m);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (!m.entries[i].marked) continue;
        if (i == 0 || m.entries[i - 1].value != m.entries[i].value - 1)
            add_once(out, "marked entry not preceded by value one less");
    }
    return out;
}

std::vector<std::string> validate(const GrowthSeq& g) {
    std::vector<std::string> out;
    int last_nonzero = 0;
    for (std::size_t i = 0; i < g.u.size(); ++i) {
        int v = g.u[i];
        if (i == 0 && v != 1) add_once(out, "first entry not 1");
        if (v < 0) add_once(out, "negative entry");
        if (v > static_cast<int>(i) + 1)
            add_once(out, "entry exceeds its position");
        if (v > 0) {
            if (v < last_nonzero)
                add_once(out, "nonzero entries not weakly increasing");
            last_nonzero = v;
        }
    }
    return out;
}

std::vector<std::string> validate(const KimberlingPath& q) {
    std::vector<std::string> out;
    if (q.vertices.empty() || q.vertices.front() != Point{0, 0})
        add_once(out, "does not start at the origin");
    if (q.vertices.size() < 2) add_once(out, "fewer than two vertices");
    for (std::size_t i = 1; i < q.vertices.size(); ++i) {
        if (q.vertices[i].x <= q.vertices[i - 1].x)
            add_once(out, "x-coordinates not strictly increasing");
        if (q.vertices[i].y < q.vertices[i - 1].y)
            add_once(out, "y-coordinates not weakly increasing");
    }
    return out;
}

std::vector<std::string> validate(const BoundedSeq& s) {
    std::vector<std::string> out;
    if (s.ambient_j < 0) add_once(out, "ambient j negative");
    int running_max = 0;
    for (std::size_t k = 0; k < s.u.size(); ++k) {
        int v = s.u[k];
        if (v < 1) add_once(out, "entry not positive");
        if (v > s.ambient_j + 2) add_once(out, "entry exceeds j+2");
        if (k > 0 && v < running_max - 1)
            add_once(out, "entry below running maximum minus one");
        running_max = std::max(running_max, v);
    }
    return out;
}

std::vector<std::string> validate(const DeutschPath& p) {
    std::vector<std::string> out;
    long long level = 0;
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
        int t = p.tokens[i];
        if (t < 0) {
            add_once(out, "invalid token");
            continue;
        }
        level += (t == 0) ? 1 : -t;
        if (level < 0) add_once(out, "dips below the axis");
        if (t >= 2 && i + 1 < p.tokens.size() && p.tokens[i + 1] == 0)
            add_once(out, "long downstep followed by upstep");
    }
    if (level != 0) add_once(out, "does not end on the axis");
    return out;
}

std::vector<std::string> validate(const RamirezPath& q) {
    std::vector<std::string> out;
    long long level = 0;
    for (int t : q.tokens) {
        if (t < 0) {
            add_once(out, "invalid token");
            continue;
        }
        level += (t == 0) ? -1 : 1;
        if (level < 0) add_once(out, "dips below the axis");
    }
    if (level != 0) add_once(out, "does not end on the axis");
    return out;
}

std::vector<std::string> validate(const ColoredUnitWord& w) {
    std::vector<std::string> out;
    long long level = 0;
    for (std::size_t i = 0; i < w.units.size(); ++i) {
        UnitKind k = w.units[i];
        level += is_up(k) ? 1 : -1;
        if (level < 0) add_once(out, "dips below the axis");
        if (k == UnitKind::down_blue &&
            (i == 0 || is_up(w.units[i - 1])))
            add_once(out, "blue down-unit not preceded by a down-unit");
    }
    if (level != 0) add_once(out, "does not end on the axis");

    // Matching discipline: blue down-units must match phase-1 upsteps and
    // vice versa.
    std::vector<std::size_t> stack;
    bool matching_ok = true;
    for (std::size_t i = 0; i < w.units.size() && matching_ok; ++i) {
        if (is_up(w.units[i])) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            std::size_t up = stack.back();
            stack.pop_back();
            bool down_blue = w.units[i] == UnitKind::down_blue;
            bool up_phase1 = w.units[up] == UnitKind::up_phase1;
            if (down_blue != up_phase1) {
                add_once(out, down_blue
                                  ? "blue down-unit matches non-blue upstep"
                                  : "phase-1 upstep matched by plain downstep");
                matching_ok = false;
            }
        }
    }

    // Every maximal phase-1 run must be closed by a terminator, and every
    // terminator must close a run.
    for (std::size_t i = 0; i < w.units.size(); ++i) {
        if (w.units[i] == UnitKind::up_phase1) {
            std::size_t j = i;
            while (j < w.units.size() && w.units[j] == UnitKind::up_phase1) ++j;
            if (j >= w.units.size() || w.units[j] != UnitKind::up_terminator)
                add_once(out, "phase-1 run not followed by a terminator upstep");
            i = j;
        } else if (w.units[i] == UnitKind::up_terminator) {
            if (i == 0 || w.units[i - 1] != UnitKind::up_phase1)
                add_once(out, "terminator not following a phase-1 run");
        }
    }
    return out;
}

}  // namespace latbij
