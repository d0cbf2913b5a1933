#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "latbij/enumerate.hpp"
#include "latbij/error.hpp"
#include "latbij/schroder.hpp"
#include "latbij/text.hpp"

using namespace latbij;

namespace {

MarkedHeightSeq mh(const std::string& text) { return parse_marked_heights(text); }

// Re-applies a trace step by step on an independent copy, checking the
// rewriting invariants along the way: position bound preserved, marked value
// sum strictly monotone, marked position sum weakly monotone.
void replay(MarkedHeightSeq m, const RewriteTrace& trace, bool lonely_dir,
            const MarkedHeightSeq& expected_end,
            const std::vector<std::string>* intermediates = nullptr) {
    auto value_sum = [](const MarkedHeightSeq& s) {
        int t = 0;
        for (const auto& e : s.entries)
            if (e.marked) t += e.value;
        return t;
    };
    auto pos_sum = [](const MarkedHeightSeq& s) {
        int t = 0;
        for (std::size_t i = 0; i < s.entries.size(); ++i)
            if (s.entries[i].marked) t += static_cast<int>(i) + 1;
        return t;
    };

    std::size_t step_no = 0;
    for (const auto& step : trace) {
        int before_values = value_sum(m);
        int before_positions = pos_sum(m);
        std::size_t i = static_cast<std::size_t>(step.pos) - 1;
        REQUIRE(i < m.entries.size());
        REQUIRE(m.entries[i].marked);
        REQUIRE(m.entries[i].value == step.from);
        if (lonely_dir) {
            REQUIRE(i >= 1);
            m.entries[i] = m.entries[i - 1];
            m.entries[i - 1] = {step.to, true};
        } else {
            REQUIRE(i + 1 < m.entries.size());
            m.entries[i] = m.entries[i + 1];
            m.entries[i + 1] = {step.to, true};
        }
        // general-form invariants survive every step
        CHECK(validate(m).empty());
        if (lonely_dir) {
            CHECK(value_sum(m) == before_values - 1);
            CHECK(pos_sum(m) <= before_positions);
        } else {
            CHECK(value_sum(m) == before_values + 1);
            CHECK(pos_sum(m) >= before_positions);
        }
        if (intermediates) {
            REQUIRE(step_no < intermediates->size());
            CHECK(format(m) == (*intermediates)[step_no]);
        }
        ++step_no;
    }
    CHECK(m == expected_end);
}

}  // namespace

TEST_CASE("heights of the worked example") {
    auto p = parse_schroder("EDENEDNDDNEN");
    CHECK(format(heights_of(p)) == "1 2d 2 3 4d 6d 7d 8");
    CHECK(format(heights_of(parse_schroder("EN"))) == "1");
    CHECK(format(heights_of(parse_schroder("EDN"))) == "1 2d");
    CHECK_THROWS_AS(heights_of(SchroderPath{"ENDEN"}), Error);  // not little
    try {
        heights_of(SchroderPath{"ENDEN"});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_little);
    }
}

TEST_CASE("path of heights inverts heights") {
    CHECK(format(path_of_heights(mh("1 2d 2 3 4d 6d 7d 8"))) == "EDENEDNDDNEN");
    CHECK(format(path_of_heights(mh("1"))) == "EN");
    CHECK(format(path_of_heights(mh("1 1"))) == "EENN");
    // errors carry the violated clause and its position
    CHECK_THROWS_WITH_AS(
        path_of_heights(mh("1 1d")),
        "NotRaw: no strict increase into marked entry (at position 2)", Error);
    CHECK_THROWS_WITH_AS(path_of_heights(mh("1 2 1 3")),
                         "NotRaw: values not weakly increasing (at position 3)",
                         Error);
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enum_little_schroder(n))
            CHECK(path_of_heights(heights_of(p)) == p);
}

TEST_CASE("the derivation table, line by line") {
    const std::vector<std::string> table = {
        "1 2d 2 3 5d 4d 7d 8",
        "1 2d 2 4d 3 4d 7d 8",
        "1 2d 3d 2 3 4d 7d 8",
        "1 2d 3d 2 3 6d 4d 8",
        "1 2d 3d 2 5d 3 4d 8",
        "1 2d 3d 4d 2 3 4d 8",
    };
    auto start = mh("1 2d 2 3 4d 6d 7d 8");
    RewriteTrace trace;
    auto normal = normalize_lonely(start, Strategy::leftmost, &trace);
    CHECK(format(normal) == "1 2d 3d 4d 2 3 4d 8");
    CHECK(lonely_free_violations(normal).empty());

    REQUIRE(trace.size() == 6);
    CHECK(trace == RewriteTrace{{6, 6, 5},
                                {5, 5, 4},
                                {4, 4, 3},
                                {7, 7, 6},
                                {6, 6, 5},
                                {5, 5, 4}});
    CHECK(format_step(trace[0]) == "swap pos=6 value=6→5");
    replay(start, trace, true, normal, &table);
}

TEST_CASE("offending normalization inverts the derivation") {
    auto start = mh("1 2d 3d 4d 2 3 4d 8");

    // rightmost picks the redexes that retrace the derivation table bottom
    // to top, line by line
    const std::vector<std::string> reversed_table = {
        "1 2d 3d 2 5d 3 4d 8",
        "1 2d 3d 2 3 6d 4d 8",
        "1 2d 3d 2 3 4d 7d 8",
        "1 2d 2 4d 3 4d 7d 8",
        "1 2d 2 3 5d 4d 7d 8",
        "1 2d 2 3 4d 6d 7d 8",
    };
    RewriteTrace rtrace;
    auto raw_r = normalize_offending(start, Strategy::rightmost, &rtrace);
    CHECK(format(raw_r) == "1 2d 2 3 4d 6d 7d 8");
    replay(start, rtrace, false, raw_r, &reversed_table);

    // leftmost walks a different redex order but lands on the same raw form
    const std::vector<std::string> leftmost_states = {
        "1 2d 3d 2 5d 3 4d 8",
        "1 2d 2 4d 5d 3 4d 8",
        "1 2d 2 4d 3 6d 4d 8",
        "1 2d 2 3 5d 6d 4d 8",
        "1 2d 2 3 5d 4d 7d 8",
        "1 2d 2 3 4d 6d 7d 8",
    };
    RewriteTrace ltrace;
    auto raw_l = normalize_offending(start, Strategy::leftmost, &ltrace);
    CHECK(raw_l == raw_r);
    CHECK(format_step(ltrace[0]) == "swap pos=4 value=4→5");
    replay(start, ltrace, false, raw_l, &leftmost_states);
}

TEST_CASE("normalization edge cases") {
    CHECK(format(normalize_lonely(mh("1 2d"), Strategy::leftmost)) == "1 2d");
    CHECK(format(normalize_offending(mh("1 2d"), Strategy::leftmost)) == "1 2d");
    // not offending: strict inequality required
    CHECK(format(normalize_offending(mh("1 2d 2"), Strategy::leftmost)) ==
          "1 2d 2");
    // lonely-free input that is not in the bijection image
    CHECK_THROWS_WITH_AS(
        normalize_offending(mh("1 2 2d"), Strategy::leftmost),
        "NotInvertible: no strict increase into marked entry (at position 3)",
        Error);
    try {
        normalize_offending(mh("1 2 2d"), Strategy::leftmost);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_invertible);
    }
}

TEST_CASE("zero out and remark") {
    CHECK(format(zero_out(mh("1 2d 3d 4d 2 3 4d 8"))) == "1 0 0 0 2 3 0 8");
    CHECK(format(zero_out(mh("1"))) == "1");
    CHECK(format(zero_out(mh("1 2d"))) == "1 0");
    CHECK_THROWS_WITH_AS(
        zero_out(mh("1 1 3d")),  // lonely entry remains
        "NotLonelyFree: marked entry not preceded by value one less (at "
        "position 3)",
        Error);

    CHECK(format(remark(parse_growth_seq("1 0 0 0 2 3 0 8"))) ==
          "1 2d 3d 4d 2 3 4d 8");
    CHECK(format(remark(parse_growth_seq("1"))) == "1");
    CHECK(format(remark(parse_growth_seq("1 0"))) == "1 2d");
    CHECK_THROWS_AS(remark(GrowthSeq{{1, 0, 2, 1}}), Error);

    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enum_growth_sequences(n))
            CHECK(zero_out(remark(g)) == g);
}

TEST_CASE("forward on the worked examples") {
    CHECK(format(schroder_forward(parse_schroder("EDENEDNDDNEN"))) ==
          "1 0 0 0 2 3 0 8");
    CHECK(format(schroder_forward(parse_schroder("EENN"))) == "1 1");
    CHECK(format(schroder_forward(parse_schroder("ENEN"))) == "1 2");
    CHECK(format(schroder_forward(parse_schroder("EDN"))) == "1 0");
    CHECK(format(schroder_backward(parse_growth_seq("1 0 0 0 2 3 0 8"))) ==
          "EDENEDNDDNEN");
}

TEST_CASE("round trips, zero counts, first entry") {
    for (int n = 1; n <= 7; ++n) {
        auto domain = enum_little_schroder(n);
        auto codomain = enum_growth_sequences(n);
        REQUIRE(domain.size() == codomain.size());
        std::set<std::string> images;
        for (const auto& p : domain) {
            auto g = schroder_forward(p);
            CHECK(validate(g).empty());
            CHECK(schroder_backward(g) == p);
            CHECK(g.u.front() == 1);
            auto zeros = std::count(g.u.begin(), g.u.end(), 0);
            auto ds = std::count(p.steps.begin(), p.steps.end(), 'D');
            CHECK(zeros == ds);
            images.insert(format(g));
        }
        CHECK(images.size() == domain.size());  // injective, hence bijective
        for (const auto& g : codomain)
            CHECK(schroder_forward(schroder_backward(g)) == g);
    }
}

TEST_CASE("strategy confluence at small sizes") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enum_little_schroder(n)) {
            auto m = heights_of(p);
            auto left = normalize_lonely(m, Strategy::leftmost);
            auto right = normalize_lonely(m, Strategy::rightmost);
            CHECK(left == right);
            CHECK(normalize_offending(left, Strategy::leftmost) ==
                  normalize_offending(left, Strategy::rightmost));
            CHECK(normalize_offending(left, Strategy::leftmost) == m);
        }
    }
    auto fig = mh("1 2d 2 3 4d 6d 7d 8");
    CHECK(format(normalize_lonely(fig, Strategy::rightmost)) ==
          "1 2d 3d 4d 2 3 4d 8");
}

TEST_CASE("catalan specialization on D-free paths") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> image;
        for (const auto& p : enum_little_schroder(n)) {
            if (p.steps.find('D') != std::string::npos) continue;
            auto g = schroder_forward(p);
            // zero-free, positive, weakly increasing, u_i <= i
            int prev = 0;
            for (std::size_t i = 0; i < g.u.size(); ++i) {
                CHECK(g.u[i] >= 1);
                CHECK(g.u[i] >= prev);
                CHECK(g.u[i] <= static_cast<int>(i) + 1);
                prev = g.u[i];
            }
            image.insert(format(g));
        }
        std::set<std::string> zero_free;
        for (const auto& g : enum_growth_sequences(n))
            if (std::find(g.u.begin(), g.u.end(), 0) == g.u.end())
                zero_free.insert(format(g));
        CHECK(image == zero_free);
        CHECK(image.size() == oracles::dyck_count(n));
    }
}
