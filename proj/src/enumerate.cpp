#include "latbij/enumerate.hpp"

#include <algorithm>

#include "latbij/error.hpp"

namespace latbij {

namespace {

struct Budget {
    std::uint64_t remaining;

    void spend() {
        if (remaining == 0)
            fail(Errc::resource_limit, "object ceiling exceeded");
        --remaining;
    }
};

// --- little Schroder paths -------------------------------------------------
// Word-building backtracking over E, D, N (that emission order). Any prefix
// with y <= x and #E+#D <= n extends to a completion, so the only pruning
// needed is the local step constraints.

template <class Emit>
void walk_schroder(int n, std::string& word, int e, int d, int nn, Emit&& emit) {
    int x = e + d, y = nn + d;
    if (e + d == n && nn == e) {
        emit(word);
        return;  // no step can extend a completed word
    }
    if (e + d < n) {
        word.push_back('E');
        walk_schroder(n, word, e + 1, d, nn, emit);
        word.back() = 'D';
        if (y < x) walk_schroder(n, word, e, d + 1, nn, emit);
        word.pop_back();
    }
    if (y < x) {
        word.push_back('N');
        walk_schroder(n, word, e, d, nn + 1, emit);
        word.pop_back();
    }
}

// --- growth sequences -------------------------------------------------------

template <class Emit>
void walk_growth(int n, std::vector<int>& u, int last_nonzero, Emit&& emit) {
    int i = static_cast<int>(u.size()) + 1;
    if (i > n) {
        emit(u);
        return;
    }
    if (i == 1) {
        u.push_back(1);
        walk_growth(n, u, 1, emit);
        u.pop_back();
        return;
    }
    u.push_back(0);
    walk_growth(n, u, last_nonzero, emit);
    for (int v = last_nonzero; v <= i; ++v) {
        u.back() = v;
        walk_growth(n, u, v, emit);
    }
    u.pop_back();
}

// --- Kimberling paths -------------------------------------------------------
// From the current vertex, interior candidates (x,y) in ascending (x,y)
// order all precede the terminal jump to (i,j), which matches vertex-
// sequence lexicographic order because interior x <= i-1 < i.

template <class Emit>
void walk_kimberling(int i, int j, std::vector<Point>& vs, Emit&& emit) {
    const Point cur = vs.back();
    for (int x = cur.x + 1; x <= i - 1; ++x) {
        for (int y = cur.y; y <= j; ++y) {
            vs.push_back({x, y});
            walk_kimberling(i, j, vs, emit);
            vs.pop_back();
        }
    }
    vs.push_back({i, j});
    emit(vs);
    vs.pop_back();
}

// --- bounded sequences -------------------------------------------------------

template <class Emit>
void walk_bounded(int i, int j, std::vector<int>& u, int running_max, Emit&& emit) {
    if (static_cast<int>(u.size()) == i) {
        emit(u);
        return;
    }
    for (int v = std::max(1, running_max - 1); v <= j + 2; ++v) {
        u.push_back(v);
        walk_bounded(i, j, u, std::max(running_max, v), emit);
        u.pop_back();
    }
}

// --- Deutsch paths ------------------------------------------------------------
// remaining = steps left, level = current height, prev_long = last token was
// a downstep of depth >= 2 (so an upstep is forbidden next).

template <class Emit>
void walk_deutsch(std::vector<int>& toks, int remaining, int level, bool prev_long,
                  Emit&& emit) {
    if (remaining == 0) {
        if (level == 0) emit(toks);
        return;
    }
    if (!prev_long && remaining >= 2) {
        toks.push_back(0);
        walk_deutsch(toks, remaining - 1, level + 1, false, emit);
        toks.pop_back();
    }
    for (int j = 1; j <= level; ++j) {
        // a downstep landing on the axis mid-path forces an upstep next,
        // which only a unit downstep permits
        int after = level - j;
        bool ok = (remaining == 1) ? (after == 0)
                                   : (after >= 1 || (j == 1 && remaining >= 3));
        if (!ok) continue;
        toks.push_back(j);
        walk_deutsch(toks, remaining - 1, after, j >= 2, emit);
        toks.pop_back();
    }
}

// --- Ramirez paths -------------------------------------------------------------
// budget = x-extent still to place. A state is completable iff budget == level
// or budget >= level + 2.

template <class Emit>
void walk_ramirez(std::vector<int>& toks, int budget, int level, Emit&& emit) {
    if (budget == 0) {
        emit(toks);
        return;
    }
    if (level >= 1) {
        toks.push_back(0);
        walk_ramirez(toks, budget - 1, level - 1, emit);
        toks.pop_back();
    }
    for (int k = 1; k + level + 1 <= budget; ++k) {
        if (budget - k == level + 2) continue;  // dead state
        toks.push_back(k);
        walk_ramirez(toks, budget - k, level + 1, emit);
        toks.pop_back();
    }
}

void require(bool cond, const char* what) {
    if (!cond) fail(Errc::invariant, what);
}

}  // namespace

std::vector<SchroderPath> enum_little_schroder(int n, const Limits& lim) {
    require(n >= 1, "semilength must be >= 1");
    std::vector<SchroderPath> out;
    Budget budget{lim.max_objects};
    std::string word;
    word.reserve(2 * n);
    walk_schroder(n, word, 0, 0, 0, [&](const std::string& w) {
        budget.spend();
        out.push_back(SchroderPath{w});
    });
    return out;
}

std::vector<GrowthSeq> enum_growth_sequences(int n, const Limits& lim) {
    require(n >= 1, "length must be >= 1");
    std::vector<GrowthSeq> out;
    Budget budget{lim.max_objects};
    std::vector<int> u;
    u.reserve(n);
    walk_growth(n, u, 0, [&](const std::vector<int>& v) {
        budget.spend();
        out.push_back(GrowthSeq{v});
    });
    return out;
}

std::vector<KimberlingPath> enum_kimberling(int i, int j, const Limits& lim) {
    require(i >= 1, "terminal x must be >= 1");
    require(j >= 0, "terminal y must be >= 0");
    std::vector<KimberlingPath> out;
    Budget budget{lim.max_objects};
    std::vector<Point> vs{{0, 0}};
    walk_kimberling(i, j, vs, [&](const std::vector<Point>& v) {
        budget.spend();
        out.push_back(KimberlingPath{v});
    });
    return out;
}

std::vector<BoundedSeq> enum_bounded_sequences(int i, int j, const Limits& lim) {
    require(i >= 0, "length must be >= 0");
    require(j >= 0, "ambient j must be >= 0");
    std::vector<BoundedSeq> out;
    Budget budget{lim.max_objects};
    std::vector<int> u;
    u.reserve(i);
    walk_bounded(i, j, u, 0, [&](const std::vector<int>& v) {
        budget.spend();
        out.push_back(BoundedSeq{v, j});
    });
    return out;
}

std::vector<DeutschPath> enum_deutsch(int n, const Limits& lim) {
    require(n >= 0, "step count must be >= 0");
    std::vector<DeutschPath> out;
    Budget budget{lim.max_objects};
    std::vector<int> toks;
    toks.reserve(n);
    walk_deutsch(toks, n, 0, false, [&](const std::vector<int>& t) {
        budget.spend();
        out.push_back(DeutschPath{t});
    });
    return out;
}

std::vector<RamirezPath> enum_ramirez(int n, const Limits& lim) {
    require(n >= 0, "size must be >= 0");
    std::vector<RamirezPath> out;
    Budget budget{lim.max_objects};
    std::vector<int> toks;
    walk_ramirez(toks, n, 0, [&](const std::vector<int>& t) {
        budget.spend();
        out.push_back(RamirezPath{t});
    });
    return out;
}

Count kimberling_count_by_interior(int i, int j, int k) {
    require(i >= 1 && j >= 0 && k >= 0, "need i >= 1, j >= 0, k >= 0");
    return checked_mul(binomial(i - 1, k), binomial(j + k, k));
}

Family family_from_name(const std::string& name) {
    if (name == "little-schroder" || name == "schroder") return Family::little_schroder;
    if (name == "growth-seq") return Family::growth_seq;
    if (name == "kimberling") return Family::kimberling;
    if (name == "bounded-seq") return Family::bounded_seq;
    if (name == "deutsch") return Family::deutsch;
    if (name == "ramirez") return Family::ramirez;
    fail(Errc::syntax, "unknown family \"" + name + "\"");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::little_schroder: return "little-schroder";
        case Family::growth_seq: return "growth-seq";
        case Family::kimberling: return "kimberling";
        case Family::bounded_seq: return "bounded-seq";
        case Family::deutsch: return "deutsch";
        case Family::ramirez: return "ramirez";
    }
    return "?";
}

bool family_is_two_param(Family f) {
    return f == Family::kimberling || f == Family::bounded_seq;
}

Count count(Family f, int a, int b, const Limits& lim) {
    Budget budget{lim.max_objects};
    Count total{0};
    auto tally = [&](const auto&) {
        budget.spend();
        total = checked_add(total, Count{1});
    };
    switch (f) {
        case Family::little_schroder: {
            require(a >= 1, "semilength must be >= 1");
            std::string word;
            walk_schroder(a, word, 0, 0, 0, tally);
            break;
        }
        case Family::growth_seq: {
            require(a >= 1, "length must be >= 1");
            std::vector<int> u;
            walk_growth(a, u, 0, tally);
            break;
        }
        case Family::kimberling: {
            require(a >= 1 && b >= 0, "need i >= 1, j >= 0");
            for (int k = 0; k <= a - 1; ++k)
                total = checked_add(total, kimberling_count_by_interior(a, b, k));
            break;
        }
        case Family::bounded_seq: {
            require(a >= 0 && b >= 0, "need i >= 0, j >= 0");
            std::vector<int> u;
            walk_bounded(a, b, u, 0, tally);
            break;
        }
        case Family::deutsch: {
            require(a >= 0, "step count must be >= 0");
            std::vector<int> toks;
            walk_deutsch(toks, a, 0, false, tally);
            break;
        }
        case Family::ramirez: {
            require(a >= 0, "size must be >= 0");
            std::vector<int> toks;
            walk_ramirez(toks, a, 0, tally);
            break;
        }
    }
    return total;
}

}  // namespace latbij
