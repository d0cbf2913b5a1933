#include "latbij/kimberling.hpp"

#include <algorithm>

#include "latbij/error.hpp"

namespace latbij {

namespace {

void guard(bool cond, const char* what) {
    if (!cond) fail(Errc::assertion, what);
}

}  // namespace

KimberlingPath phi(const BoundedSeq& u) {
    auto violations = validate(u);
    if (!violations.empty()) fail(Errc::invalid_sequence, violations.front());

    const std::size_t i = u.u.size();

    // Frame bookkeeping for the recursion: the entry at position s acts in a
    // frame shifted down by every k-2 drop consumed before it, with a
    // correspondingly smaller ambient bound.
    std::vector<int> shift(i + 1, 0);
    std::vector<int> ambient(i + 1, u.ambient_j);
    for (std::size_t s = 0; s < i; ++s) {
        int k = u.u[s] - shift[s];
        guard(k >= 1, "entry falls below its frame");
        guard(k <= ambient[s] + 2, "entry exceeds its frame bound");
        int drop = (k >= 3) ? k - 2 : 0;
        shift[s + 1] = shift[s] + drop;
        ambient[s + 1] = ambient[s] - drop;
    }

    // Unroll the recursion from the innermost suffix outwards. The empty
    // suffix maps to the single step (0,0) -> (1, ambient).
    std::vector<Point> path{{0, 0}, {1, ambient[i]}};
    for (std::size_t s = i; s-- > 0;) {
        int k = u.u[s] - shift[s];
        if (k == 1) {
            // shift east; the shifted origin (1,0) becomes (0,0), so the
            // image has no vertex on the line x = 1
            for (auto& v : path) v.x += 1;
            path.front() = {0, 0};
        } else if (k == 2) {
            for (auto& v : path) v.x += 1;
            path.insert(path.begin(), {0, 0});
        } else {
            for (auto& v : path) {
                v.x += 1;
                v.y += k - 2;
            }
            path.insert(path.begin(), {0, 0});
        }
    }
    return KimberlingPath{path};
}

BoundedSeq phi_inv(const KimberlingPath& q) {
    auto violations = validate(q);
    if (!violations.empty()) fail(Errc::malformed_path, violations.front());

    BoundedSeq out;
    out.ambient_j = q.terminal().y;

    // Explicit agenda instead of call recursion: peel one entry per round.
    // Entries produced after a (1,y) round are raised by y, so the raises
    // accumulate into a running shift applied at emission.
    std::vector<Point> path = q.vertices;
    int shift = 0;
    while (!(path.size() == 2 && path[1].x == 1)) {
        auto at_x1 = std::find_if(path.begin(), path.end(),
                                  [](Point v) { return v.x == 1; });
        if (at_x1 == path.end()) {
            // no vertex on x = 1: first entry was 1
            out.u.push_back(1 + shift);
            for (auto& v : path) v.x -= 1;
            path.front() = {0, 0};
        } else if (at_x1->y == 0) {
            // vertex (1,0): first entry was 2
            out.u.push_back(2 + shift);
            path.erase(path.begin());
            for (auto& v : path) v.x -= 1;
        } else {
            // vertex (1,y), y >= 1: first entry was y + 2
            int y = at_x1->y;
            out.u.push_back(y + 2 + shift);
            path.erase(path.begin());
            for (auto& v : path) {
                v.x -= 1;
                v.y -= y;
            }
            shift += y;
        }
        guard(path.size() >= 2 && path.front() == Point{0, 0},
              "peeled path lost its origin");
    }
    return out;
}

}  // namespace latbij
