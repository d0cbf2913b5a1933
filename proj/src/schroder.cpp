#include "latbij/schroder.hpp"

#include <string>

#include "latbij/error.hpp"

namespace latbij {

namespace {

void require_valid(const MarkedHeightSeq& m) {
    auto v = validate(m);
    if (!v.empty()) fail(Errc::invariant, v.front());
}

// first raw-form violation with its 1-based position, for error reporting
[[noreturn]] void fail_raw(Errc code, const MarkedHeightSeq& m) {
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const auto& h = m.entries[i];
        if (i == 0 && (h.value != 1 || h.marked))
            fail_at(code, "first entry not an unmarked 1", 1);
        if (h.value < 1) fail_at(code, "entry value below 1", i + 1);
        if (h.value > static_cast<int>(i) + 1)
            fail_at(code, "entry value exceeds its position", i + 1);
        if (i > 0) {
            if (h.value < m.entries[i - 1].value)
                fail_at(code, "values not weakly increasing", i + 1);
            if (h.marked && h.value <= m.entries[i - 1].value)
                fail_at(code, "no strict increase into marked entry", i + 1);
        }
    }
    fail(code, "raw-form check failed");
}

[[noreturn]] void fail_lonely_free(const MarkedHeightSeq& m) {
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (!m.entries[i].marked) continue;
        if (i == 0 || m.entries[i - 1].value != m.entries[i].value - 1)
            fail_at(Errc::not_lonely_free,
                    "marked entry not preceded by value one less", i + 1);
    }
    fail(Errc::not_lonely_free, "lonely-free check failed");
}

int find_lonely(const MarkedHeightSeq& m, Strategy strategy) {
    auto lonely = [&](std::size_t i) {
        return m.entries[i].marked &&
               m.entries[i].value >= m.entries[i - 1].value + 2;
    };
    if (strategy == Strategy::leftmost) {
        for (std::size_t i = 1; i < m.entries.size(); ++i)
            if (lonely(i)) return static_cast<int>(i);
    } else {
        for (std::size_t i = m.entries.size(); i-- > 1;)
            if (lonely(i)) return static_cast<int>(i);
    }
    return -1;
}

int find_offending(const MarkedHeightSeq& m, Strategy strategy) {
    auto offending = [&](std::size_t i) {
        return m.entries[i].marked && i + 1 < m.entries.size() &&
               m.entries[i].value > m.entries[i + 1].value;
    };
    if (strategy == Strategy::leftmost) {
        for (std::size_t i = 0; i < m.entries.size(); ++i)
            if (offending(i)) return static_cast<int>(i);
    } else {
        for (std::size_t i = m.entries.size(); i-- > 0;)
            if (offending(i)) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

std::string format_step(const RewriteStep& s) {
    return "swap pos=" + std::to_string(s.pos) + " value=" +
           std::to_string(s.from) + "→" + std::to_string(s.to);
}

MarkedHeightSeq heights_of(const SchroderPath& p) {
    auto violations = validate(p);
    for (const auto& v : violations)
        if (v == "D starts on diagonal") fail(Errc::not_little, v);
    if (!violations.empty()) fail(Errc::invariant, violations.front());

    MarkedHeightSeq m;
    int y = 0;
    for (char c : p.steps) {
        switch (c) {
            case 'E': m.entries.push_back({y + 1, false}); break;
            case 'D': ++y; m.entries.push_back({y + 1, true}); break;
            case 'N': ++y; break;
        }
    }
    return m;
}

SchroderPath path_of_heights(const MarkedHeightSeq& m) {
    if (!raw_violations(m).empty()) fail_raw(Errc::not_raw, m);

    SchroderPath p;
    int y = 0;  // current height
    for (const auto& h : m.entries) {
        int start_y = h.marked ? h.value - 2 : h.value - 1;
        for (; y < start_y; ++y) p.steps.push_back('N');
        p.steps.push_back(h.marked ? 'D' : 'E');
        y = h.value - 1;
    }
    int n = static_cast<int>(m.entries.size());
    for (; y < n; ++y) p.steps.push_back('N');
    return p;
}

MarkedHeightSeq normalize_lonely(MarkedHeightSeq m, Strategy strategy,
                                 RewriteTrace* trace) {
    require_valid(m);
    for (int i = find_lonely(m, strategy); i != -1; i = find_lonely(m, strategy)) {
        MarkedHeight moved = m.entries[i];
        if (trace)
            trace->push_back({i + 1, moved.value, moved.value - 1});
        m.entries[i] = m.entries[i - 1];
        m.entries[i - 1] = {moved.value - 1, true};
    }
    return m;
}

GrowthSeq zero_out(const MarkedHeightSeq& m) {
    require_valid(m);
    if (!lonely_free_violations(m).empty()) fail_lonely_free(m);
    GrowthSeq g;
    g.u.reserve(m.entries.size());
    for (const auto& h : m.entries) g.u.push_back(h.marked ? 0 : h.value);
    return g;
}

MarkedHeightSeq remark(const GrowthSeq& g) {
    auto violations = validate(g);
    if (!violations.empty()) fail(Errc::invalid_growth_seq, violations.front());
    MarkedHeightSeq m;
    m.entries.reserve(g.u.size());
    int prev = 0;
    for (int u : g.u) {
        if (u == 0) m.entries.push_back({prev + 1, true});
        else m.entries.push_back({u, false});
        prev = m.entries.back().value;
    }
    return m;
}

MarkedHeightSeq normalize_offending(MarkedHeightSeq m, Strategy strategy,
                                    RewriteTrace* trace) {
    require_valid(m);
    for (int i = find_offending(m, strategy); i != -1;
         i = find_offending(m, strategy)) {
        MarkedHeight moved = m.entries[i];
        if (trace)
            trace->push_back({i + 1, moved.value, moved.value + 1});
        m.entries[i] = m.entries[i + 1];
        m.entries[i + 1] = {moved.value + 1, true};
    }
    if (!raw_violations(m).empty()) fail_raw(Errc::not_invertible, m);
    return m;
}

GrowthSeq schroder_forward(const SchroderPath& p, RewriteTrace* trace) {
    return zero_out(normalize_lonely(heights_of(p), Strategy::leftmost, trace));
}

SchroderPath schroder_backward(const GrowthSeq& g, RewriteTrace* trace) {
    return path_of_heights(
        normalize_offending(remark(g), Strategy::leftmost, trace));
}

}  // namespace latbij
