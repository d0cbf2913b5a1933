#ifndef LATBIJ_PATHS_HPP
#define LATBIJ_PATHS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace latbij {

// All path objects are immutable values in practice: construct, validate,
// pass around. Every operation in the library is pure.

// ---------------------------------------------------------------------------
// Schroder paths: words over E=(1,0), N=(0,1), D=(1,1) from (0,0) to (n,n)
// staying weakly below the diagonal. Semilength n = #E + #D. A path is
// "little" when no D step starts on the diagonal y = x.

struct SchroderPath {
    std::string steps;  // characters 'E', 'N', 'D'

    int semilength() const;
    bool little() const;

    friend auto operator<=>(const SchroderPath&, const SchroderPath&) = default;
};

// ---------------------------------------------------------------------------
// Marked height sequences: the intermediate state of the Schroder rewriting
// system. One entry per E/D step; value = terminal y + 1 (height above the
// line y = -1); marked entries come from D steps.

struct MarkedHeight {
    int value = 0;
    bool marked = false;

    friend auto operator<=>(const MarkedHeight&, const MarkedHeight&) = default;
};

struct MarkedHeightSeq {
    std::vector<MarkedHeight> entries;

    friend auto operator<=>(const MarkedHeightSeq&, const MarkedHeightSeq&) = default;
};

// ---------------------------------------------------------------------------
// Growth-constrained sequences: u_1 = 1, u_i <= i, nonzero entries weakly
// increasing.

struct GrowthSeq {
    std::vector<int> u;

    friend auto operator<=>(const GrowthSeq&, const GrowthSeq&) = default;
};

// ---------------------------------------------------------------------------
// Kimberling paths: vertex sequences from (0,0) with strictly increasing x
// and weakly increasing y (steps of finite nonnegative slope). Identity is
// the vertex sequence; collinear interior vertices are distinct paths.

struct Point {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct KimberlingPath {
    std::vector<Point> vertices;

    Point terminal() const { return vertices.back(); }

    friend auto operator<=>(const KimberlingPath&, const KimberlingPath&) = default;
};

// ---------------------------------------------------------------------------
// Bounded sequences L(i,j): positive entries, u_k <= j+2, and from the second
// entry on u_k >= max(previous entries) - 1. The empty sequence is valid for
// every ambient j.

struct BoundedSeq {
    std::vector<int> u;
    int ambient_j = 0;

    friend auto operator<=>(const BoundedSeq&, const BoundedSeq&) = default;
};

// ---------------------------------------------------------------------------
// Deutsch paths: upsteps (1,1) and downsteps (1,-j), j >= 1, weakly above the
// axis and closed. Short-valley: a downstep immediately followed by an upstep
// has j = 1. Token encoding: 0 = upstep, j >= 1 = downstep of depth j.

struct DeutschPath {
    std::vector<int> tokens;

    int n() const { return static_cast<int>(tokens.size()); }

    friend auto operator<=>(const DeutschPath&, const DeutschPath&) = default;
};

// ---------------------------------------------------------------------------
// Ramirez paths: upsteps (k,1), k >= 1, and downsteps (1,-1), weakly above
// the axis, ending on it. Size = terminal x-coordinate. Token encoding:
// 0 = downstep, k >= 1 = upstep of width k.

struct RamirezPath {
    std::vector<int> tokens;

    int size() const;

    friend auto operator<=>(const RamirezPath&, const RamirezPath&) = default;
};

// ---------------------------------------------------------------------------
// Colored unit words: the intermediate state of the Deutsch bijection. Long
// downsteps are expanded into unit downsteps at the token level (fractional
// coordinates are never materialized).

enum class UnitKind : std::uint8_t {
    up_plain,
    up_phase1,      // upstep matched by a blue down-unit
    up_terminator,  // upstep closing a maximal phase-1 run
    down_plain,
    down_blue,
};

inline bool is_up(UnitKind k) {
    return k == UnitKind::up_plain || k == UnitKind::up_phase1 ||
           k == UnitKind::up_terminator;
}

struct ColoredUnitWord {
    std::vector<UnitKind> units;

    friend auto operator<=>(const ColoredUnitWord&, const ColoredUnitWord&) = default;
};

// ---------------------------------------------------------------------------
// Validation. Each function returns the complete, deterministic list of
// violated invariant clauses; an empty list means the object is valid.
// Violations are data, not errors.

std::vector<std::string> validate(const SchroderPath& p);
std::vector<std::string> validate(const MarkedHeightSeq& m);  // general form
std::vector<std::string> validate(const GrowthSeq& g);
std::vector<std::string> validate(const KimberlingPath& q);
std::vector<std::string> validate(const BoundedSeq& s);
std::vector<std::string> validate(const DeutschPath& p);
std::vector<std::string> validate(const RamirezPath& q);
std::vector<std::string> validate(const ColoredUnitWord& w);

// Additional predicates on marked height sequences, as violation lists over
// and above the general form.
std::vector<std::string> raw_violations(const MarkedHeightSeq& m);
std::vector<std::string> lonely_free_violations(const MarkedHeightSeq& m);

}  // namespace latbij

#endif
