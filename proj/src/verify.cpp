#include "latbij/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "latbij/deutsch.hpp"
#include "latbij/error.hpp"
#include "latbij/kimberling.hpp"
#include "latbij/schroder.hpp"
#include "latbij/text.hpp"

namespace latbij {

namespace detail {

std::vector<std::string> collect_failures(
    std::size_t n, ExecMode mode,
    const std::function<std::string(std::size_t)>& probe) {
    std::vector<std::pair<std::size_t, std::string>> hits;
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel
        {
            std::vector<std::pair<std::size_t, std::string>> local;
#pragma omp for schedule(dynamic, 256) nowait
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                std::string s = probe(static_cast<std::size_t>(i));
                if (!s.empty()) local.emplace_back(i, std::move(s));
            }
#pragma omp critical
            hits.insert(hits.end(), local.begin(), local.end());
        }
        std::sort(hits.begin(), hits.end());
    } else
#endif
    {
        (void)mode;
        for (std::size_t i = 0; i < n; ++i) {
            std::string s = probe(i);
            if (!s.empty()) hits.emplace_back(i, std::move(s));
        }
    }
    std::vector<std::string> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(std::move(h.second));
    return out;
}

}  // namespace detail

namespace {

using detail::collect_failures;

// Probes tag their finding so the harness can split it into the right
// report list.
constexpr char kRoundTrip = 'r';
constexpr char kCodomain = 'c';

void split_tagged(std::vector<std::string> tagged, SizeReport& cell) {
    for (auto& s : tagged) {
        char tag = s[0];
        s.erase(0, 1);
        if (tag == kRoundTrip) cell.round_trip_failures.push_back(std::move(s));
        else cell.codomain_violations.push_back(std::move(s));
    }
}

template <class A, class B, class Fwd, class Bwd>
SizeReport check_cell(SizeKey key, const std::vector<A>& domain,
                      const std::vector<B>& codomain, Fwd&& fwd, Bwd&& bwd,
                      ExecMode mode) {
    SizeReport cell;
    cell.key = key;
    cell.domain_count = Count{domain.size()};
    cell.codomain_count = Count{codomain.size()};

    std::unordered_set<std::string> codomain_set;
    codomain_set.reserve(codomain.size() * 2);
    for (const auto& b : codomain) codomain_set.insert(format(b));
    std::unordered_set<std::string> domain_set;
    domain_set.reserve(domain.size() * 2);
    for (const auto& a : domain) domain_set.insert(format(a));

    auto probe_forward = [&](std::size_t idx) -> std::string {
        const A& a = domain[idx];
        try {
            B image = fwd(a);
            auto viol = validate(image);
            if (!viol.empty())
                return std::string(1, kCodomain) + "forward image invalid (" +
                       viol.front() + "): " + format(a);
            if (!codomain_set.contains(format(image)))
                return std::string(1, kCodomain) +
                       "forward image outside codomain: " + format(a) + " -> " +
                       format(image);
            A back = bwd(image);
            if (!(back == a))
                return std::string(1, kRoundTrip) + "round trip failed: " +
                       format(a) + " -> " + format(image) + " -> " + format(back);
        } catch (const Error& e) {
            return std::string(1, kRoundTrip) + "error on " + format(a) + ": " +
                   e.what();
        }
        return {};
    };
    split_tagged(collect_failures(domain.size(), mode, probe_forward), cell);

    auto probe_backward = [&](std::size_t idx) -> std::string {
        const B& b = codomain[idx];
        try {
            A pre = bwd(b);
            auto viol = validate(pre);
            if (!viol.empty())
                return std::string(1, kCodomain) + "backward image invalid (" +
                       viol.front() + "): " + format(b);
            if (!domain_set.contains(format(pre)))
                return std::string(1, kCodomain) +
                       "backward image outside domain: " + format(b) + " -> " +
                       format(pre);
            B again = fwd(pre);
            if (!(again == b))
                return std::string(1, kRoundTrip) + "round trip failed: " +
                       format(b) + " -> " + format(pre) + " -> " + format(again);
        } catch (const Error& e) {
            return std::string(1, kRoundTrip) + "error on " + format(b) + ": " +
                   e.what();
        }
        return {};
    };
    split_tagged(collect_failures(codomain.size(), mode, probe_backward), cell);

    if (cell.domain_count != cell.codomain_count) {
        cell.count_mismatches.push_back(
            "domain " + std::to_string(cell.domain_count.value) +
            " != codomain " + std::to_string(cell.codomain_count.value));
    }
    return cell;
}

// Raw marked height sequences of length n, enumerated independently of the
// path machinery (the confluence suite must not trust heights_of).
std::vector<MarkedHeightSeq> enum_raw_sequences(int n, const Limits& lim) {
    std::vector<MarkedHeightSeq> out;
    std::uint64_t budget = lim.max_objects;
    MarkedHeightSeq m;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            if (budget == 0) fail(Errc::resource_limit, "object ceiling exceeded");
            --budget;
            out.push_back(m);
            return;
        }
        if (pos == 1) {
            m.entries.push_back({1, false});
            self(self, 2);
            m.entries.pop_back();
            return;
        }
        int prev = m.entries.back().value;
        for (int v = prev; v <= pos; ++v) {
            m.entries.push_back({v, false});
            self(self, pos + 1);
            m.entries.pop_back();
        }
        for (int v = prev + 1; v <= pos; ++v) {
            m.entries.push_back({v, true});
            self(self, pos + 1);
            m.entries.pop_back();
        }
    };
    if (n >= 1) rec(rec, 1);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

BijectionId bijection_from_name(const std::string& name) {
    if (name == "schroder") return BijectionId::schroder;
    if (name == "kimberling") return BijectionId::kimberling;
    if (name == "deutsch") return BijectionId::deutsch;
    fail(Errc::syntax, "unknown bijection \"" + name + "\"");
}

const char* bijection_name(BijectionId id) {
    switch (id) {
        case BijectionId::schroder: return "schroder";
        case BijectionId::kimberling: return "kimberling";
        case BijectionId::deutsch: return "deutsch";
    }
    return "?";
}

std::string size_label(SizeKey key) {
    if (key.b < 0) return "n=" + std::to_string(key.a);
    return "i=" + std::to_string(key.a) + ",j=" + std::to_string(key.b);
}

bool SizeReport::pass() const {
    return round_trip_failures.empty() && codomain_violations.empty() &&
           confluence_mismatches.empty() && count_mismatches.empty() &&
           domain_count == codomain_count;
}

bool Report::pass() const {
    return std::all_of(sizes.begin(), sizes.end(),
                       [](const SizeReport& s) { return s.pass(); });
}

Report check_bijection(BijectionId id, VerifyBounds bounds, ExecMode mode,
                       const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.bijection = bijection_name(id);

    switch (id) {
        case BijectionId::schroder: {
            r.bounds = "n<=" + std::to_string(bounds.max_a);
            for (int n = 1; n <= bounds.max_a; ++n) {
                auto domain = enum_little_schroder(n, lim);
                auto codomain = enum_growth_sequences(n, lim);
                auto cell = check_cell(
                    SizeKey{n, -1}, domain, codomain,
                    [](const SchroderPath& p) { return schroder_forward(p); },
                    [](const GrowthSeq& g) { return schroder_backward(g); },
                    mode);
                // the map restricts to a bijection between D-free paths
                // (rotated Dyck paths, Catalan many) and zero-free sequences
                std::size_t d_free = 0, zero_free = 0;
                for (const auto& p : domain)
                    if (p.steps.find('D') == std::string::npos) ++d_free;
                for (const auto& g : codomain)
                    if (std::find(g.u.begin(), g.u.end(), 0) == g.u.end())
                        ++zero_free;
                if (d_free != zero_free)
                    cell.count_mismatches.push_back(
                        "D-free paths " + std::to_string(d_free) +
                        " != zero-free sequences " + std::to_string(zero_free));
                r.sizes.push_back(std::move(cell));
            }
            break;
        }
        case BijectionId::kimberling: {
            int max_j = bounds.max_b < 0 ? bounds.max_a : bounds.max_b;
            r.bounds = bounds.antidiagonal
                           ? "i+j<=" + std::to_string(bounds.max_a)
                           : "i<=" + std::to_string(bounds.max_a) +
                                 ",j<=" + std::to_string(max_j);
            for (int i = 0; i <= bounds.max_a; ++i) {
                for (int j = 0; j <= max_j; ++j) {
                    if (bounds.antidiagonal && i + j > bounds.max_a) continue;
                    r.sizes.push_back(check_cell(
                        SizeKey{i, j}, enum_bounded_sequences(i, j, lim),
                        enum_kimberling(i + 1, j, lim),
                        [](const BoundedSeq& u) { return phi(u); },
                        [](const KimberlingPath& q) { return phi_inv(q); },
                        mode));
                }
            }
            break;
        }
        case BijectionId::deutsch: {
            r.bounds = "n<=" + std::to_string(bounds.max_a);
            for (int n = 0; n <= bounds.max_a; ++n) {
                r.sizes.push_back(check_cell(
                    SizeKey{n, -1}, enum_deutsch(n, lim), enum_ramirez(n, lim),
                    [](const DeutschPath& p) { return deutsch_forward(p); },
                    [](const RamirezPath& q) { return deutsch_backward(q); },
                    mode));
            }
            break;
        }
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

Report check_confluence(int max_n, ExecMode mode, const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.bijection = "schroder-confluence";
    r.bounds = "n<=" + std::to_string(max_n);

    for (int n = 1; n <= max_n; ++n) {
        auto raws = enum_raw_sequences(n, lim);
        SizeReport cell;
        cell.key = {n, -1};
        cell.domain_count = Count{raws.size()};
        cell.codomain_count = Count{raws.size()};

        auto probe = [&](std::size_t idx) -> std::string {
            const MarkedHeightSeq& m = raws[idx];
            MarkedHeightSeq left = normalize_lonely(m, Strategy::leftmost);
            MarkedHeightSeq right = normalize_lonely(m, Strategy::rightmost);
            if (left != right)
                return "lonely strategies disagree on " + format(m) + ": " +
                       format(left) + " vs " + format(right);
            MarkedHeightSeq back_left =
                normalize_offending(left, Strategy::leftmost);
            MarkedHeightSeq back_right =
                normalize_offending(left, Strategy::rightmost);
            if (back_left != back_right)
                return "offending strategies disagree on " + format(left) +
                       ": " + format(back_left) + " vs " + format(back_right);
            if (back_left != m)
                return "offending does not invert lonely on " + format(m) +
                       ": got " + format(back_left);
            return {};
        };
        cell.confluence_mismatches =
            collect_failures(raws.size(), mode, probe);
        r.sizes.push_back(std::move(cell));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

std::vector<RefCount> read_count_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io, "cannot open reference file \"" + path + "\"");
    std::vector<RefCount> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            fail(Errc::file_format, "line " + std::to_string(lineno) +
                                        ": expected 2 or 3 fields, got " +
                                        std::to_string(toks.size()));
        try {
            RefCount rc;
            rc.key.a = std::stoi(toks[0]);
            rc.key.b = toks.size() == 3 ? std::stoi(toks[1]) : -1;
            rc.value = Count{std::stoull(toks.back())};
            out.push_back(rc);
        } catch (const std::exception&) {
            fail(Errc::file_format,
                 "line " + std::to_string(lineno) + ": malformed integer");
        }
    }
    if (out.empty())
        fail(Errc::file_format, "no data lines in \"" + path + "\"");
    return out;
}

Report crosscheck_counts(Family family, VerifyBounds bounds,
                         const std::string& path, const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    auto refs = read_count_file(path);

    Report r;
    r.bijection = std::string(family_name(family)) + "-counts";
    r.bounds = family_is_two_param(family)
                   ? "i<=" + std::to_string(bounds.max_a) + ",j<=" +
                         std::to_string(bounds.max_b < 0 ? bounds.max_a
                                                         : bounds.max_b)
                   : "n<=" + std::to_string(bounds.max_a);

    int max_b = bounds.max_b < 0 ? bounds.max_a : bounds.max_b;
    for (const auto& ref : refs) {
        bool two = family_is_two_param(family);
        if (two != (ref.key.b >= 0))
            fail(Errc::file_format,
                 std::string("reference arity does not fit family ") +
                     family_name(family));
        if (ref.key.a > bounds.max_a) continue;
        if (two && ref.key.b > max_b) continue;

        SizeReport cell;
        cell.key = ref.key;
        cell.domain_count = count(family, ref.key.a, ref.key.b, lim);
        cell.codomain_count = ref.value;
        if (cell.domain_count != cell.codomain_count)
            cell.count_mismatches.push_back(
                "computed " + std::to_string(cell.domain_count.value) +
                " != reference " + std::to_string(cell.codomain_count.value));
        r.sizes.push_back(std::move(cell));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

Report merge_reports(Report a, const Report& b) {
    if (a.bijection != b.bijection)
        fail(Errc::invariant, "cannot merge reports of different bijections");
    for (const auto& s : b.sizes) a.sizes.push_back(s);
    std::sort(a.sizes.begin(), a.sizes.end(),
              [](const SizeReport& x, const SizeReport& y) {
                  return x.key < y.key;
              });
    for (std::size_t i = 1; i < a.sizes.size(); ++i)
        if (a.sizes[i].key == a.sizes[i - 1].key)
            fail(Errc::invariant, "overlapping shards at " +
                                      size_label(a.sizes[i].key));
    if (a.bounds != b.bounds) a.bounds = a.bounds + " + " + b.bounds;
    a.elapsed_seconds += b.elapsed_seconds;
    return a;
}

namespace {

void print_list(std::ostringstream& out, const char* label,
                const std::vector<std::string>& items) {
    constexpr std::size_t kShown = 5;
    for (std::size_t i = 0; i < items.size() && i < kShown; ++i)
        out << "  " << label << ": " << items[i] << "\n";
    if (items.size() > kShown)
        out << "  " << label << ": ... " << (items.size() - kShown)
            << " more\n";
}

}  // namespace

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "bijection: " << r.bijection << "\n";
    out << "bounds: " << r.bounds << "\n";
    for (const auto& s : r.sizes) {
        out << size_label(s.key) << ": domain=" << s.domain_count.value
            << " codomain=" << s.codomain_count.value
            << " rt_failures=" << s.round_trip_failures.size()
            << " codomain_violations=" << s.codomain_violations.size()
            << " confluence_mismatches=" << s.confluence_mismatches.size()
            << " count_mismatches=" << s.count_mismatches.size()
            << (s.pass() ? " PASS" : " FAIL") << "\n";
        print_list(out, "rt", s.round_trip_failures);
        print_list(out, "codomain", s.codomain_violations);
        print_list(out, "confluence", s.confluence_mismatches);
        print_list(out, "count", s.count_mismatches);
    }
    out << "counts:";
    for (const auto& s : r.sizes) out << " " << s.domain_count.value;
    out << "\n";
    out << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    out << "elapsed: " << r.elapsed_seconds << "s\n";
    return out.str();
}

std::string to_json(const Report& r) {
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& s : r.sizes) {
        sizes.push_back({
            {"size", size_label(s.key)},
            {"domain", s.domain_count.value},
            {"codomain", s.codomain_count.value},
            {"round_trip_failures", s.round_trip_failures},
            {"codomain_violations", s.codomain_violations},
            {"confluence_mismatches", s.confluence_mismatches},
            {"count_mismatches", s.count_mismatches},
            {"pass", s.pass()},
        });
    }
    nlohmann::json j{
        {"bijection", r.bijection},
        {"bounds", r.bounds},
        {"sizes", sizes},
        {"pass", r.pass()},
        {"elapsed_seconds", r.elapsed_seconds},
    };
    return j.dump(2);
}

}  // namespace latbij
