// latbij: enumerate, map, verify, and render the three lattice-path
// bijection families.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit / overflow, 4 invalid domain object, 5 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "latbij/deutsch.hpp"
#include "latbij/enumerate.hpp"
#include "latbij/error.hpp"
#include "latbij/kimberling.hpp"
#include "latbij/render.hpp"
#include "latbij/schroder.hpp"
#include "latbij/text.hpp"
#include "latbij/verify.hpp"

namespace {

using namespace latbij;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::resource_limit:
        case Errc::overflow:
            return 3;
        case Errc::io:
        case Errc::file_format:
            return 5;
        default:
            return 4;
    }
}

Limits limits_from_env() {
    Limits lim;
    if (const char* s = std::getenv("LATTICEBIJ_MAX_OBJECTS")) {
        try {
            lim.max_objects = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "error: LATTICEBIJ_MAX_OBJECTS is not an integer\n";
            std::exit(2);
        }
    }
    return lim;
}

struct EnumArgs {
    std::string family;
    std::optional<int> n, i, j;
    std::string format = "words";
};

// flag values that fail to name a family/bijection are usage errors, unlike
// malformed object text which is a domain error
template <class Lookup>
auto named_or_usage(Lookup&& lookup, const std::string& name)
    -> std::optional<decltype(lookup(name))> {
    try {
        return lookup(name);
    } catch (const Error&) {
        std::cerr << "error: unknown name \"" << name << "\"\n";
        return std::nullopt;
    }
}

int run_enumerate(const EnumArgs& a) {
    auto looked = named_or_usage(family_from_name, a.family);
    if (!looked) return 2;
    Family fam = *looked;
    Limits lim = limits_from_env();
    bool two = family_is_two_param(fam);
    if (two && (!a.i || !a.j)) {
        std::cerr << "error: family " << family_name(fam)
                  << " needs --i and --j\n";
        return 2;
    }
    if (!two && !a.n) {
        std::cerr << "error: family " << family_name(fam) << " needs --n\n";
        return 2;
    }

    auto emit = [&](const std::string& text) {
        if (a.format == "json") {
            nlohmann::json line{{"family", family_name(fam)}, {"text", text}};
            if (two) {
                line["i"] = *a.i;
                line["j"] = *a.j;
            } else {
                line["n"] = *a.n;
            }
            std::cout << line.dump() << "\n";
        } else {
            std::cout << text << "\n";
        }
    };

    switch (fam) {
        case Family::little_schroder:
            if (*a.n < 1) { std::cerr << "error: --n must be >= 1\n"; return 2; }
            for (const auto& p : enum_little_schroder(*a.n, lim)) emit(format(p));
            break;
        case Family::growth_seq:
            if (*a.n < 1) { std::cerr << "error: --n must be >= 1\n"; return 2; }
            for (const auto& g : enum_growth_sequences(*a.n, lim)) emit(format(g));
            break;
        case Family::kimberling:
            if (*a.i < 1 || *a.j < 0) {
                std::cerr << "error: need --i >= 1 and --j >= 0\n";
                return 2;
            }
            for (const auto& q : enum_kimberling(*a.i, *a.j, lim)) emit(format(q));
            break;
        case Family::bounded_seq:
            if (*a.i < 0 || *a.j < 0) {
                std::cerr << "error: need --i >= 0 and --j >= 0\n";
                return 2;
            }
            for (const auto& s : enum_bounded_sequences(*a.i, *a.j, lim))
                emit(format(s));
            break;
        case Family::deutsch:
            if (*a.n < 0) { std::cerr << "error: --n must be >= 0\n"; return 2; }
            for (const auto& p : enum_deutsch(*a.n, lim)) emit(format(p));
            break;
        case Family::ramirez:
            if (*a.n < 0) { std::cerr << "error: --n must be >= 0\n"; return 2; }
            for (const auto& q : enum_ramirez(*a.n, lim)) emit(format(q));
            break;
    }
    return 0;
}

struct MapArgs {
    std::string bijection;
    std::string direction;
    std::string input;
    std::optional<int> j;
    bool trace = false;
};

int run_map(const MapArgs& a) {
    auto looked = named_or_usage(bijection_from_name, a.bijection);
    if (!looked) return 2;
    BijectionId id = *looked;
    bool forward = a.direction == "forward";

    switch (id) {
        case BijectionId::schroder: {
            RewriteTrace trace;
            std::string out;
            if (forward) {
                out = format(schroder_forward(parse_schroder(a.input),
                                              a.trace ? &trace : nullptr));
            } else {
                out = format(schroder_backward(parse_growth_seq(a.input),
                                               a.trace ? &trace : nullptr));
            }
            for (const auto& s : trace) std::cout << format_step(s) << "\n";
            std::cout << out << "\n";
            break;
        }
        case BijectionId::kimberling: {
            if (forward) {
                if (!a.j) {
                    std::cerr << "error: kimberling forward needs --j\n";
                    return 2;
                }
                std::cout << format(phi(parse_bounded_seq(a.input, *a.j))) << "\n";
            } else {
                std::cout << format(phi_inv(parse_kimberling(a.input))) << "\n";
            }
            break;
        }
        case BijectionId::deutsch: {
            MatchTrace trace;
            std::string out;
            if (forward) {
                out = format(deutsch_forward(parse_deutsch(a.input),
                                             a.trace ? &trace : nullptr));
            } else {
                out = format(deutsch_backward(parse_ramirez(a.input),
                                              a.trace ? &trace : nullptr));
            }
            for (const auto& s : trace) std::cout << format_step(s) << "\n";
            std::cout << out << "\n";
            break;
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string bijection;
    int max = 5;
    std::optional<int> max_j;
    std::optional<std::string> ref;
    bool serial = false;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    Limits lim = limits_from_env();
    ExecMode mode = a.serial ? ExecMode::serial : ExecMode::parallel;
    bool all = a.bijection == "all";
    if (!all && !named_or_usage(bijection_from_name, a.bijection)) return 2;
    if (all && a.ref) {
        std::cerr << "error: --ref needs a specific bijection\n";
        return 2;
    }

    std::vector<Report> reports;
    if (all || a.bijection == "schroder") {
        reports.push_back(check_bijection(
            BijectionId::schroder, {a.max, -1}, mode, lim));
        reports.push_back(check_confluence(a.max, mode, lim));
    }
    if (all || a.bijection == "kimberling") {
        // without an explicit j bound, verify the antidiagonal triangle
        // i+j <= max rather than the (much larger) max-by-max rectangle
        VerifyBounds kb{a.max, a.max_j.value_or(a.max), !a.max_j.has_value()};
        reports.push_back(
            check_bijection(BijectionId::kimberling, kb, mode, lim));
    }
    if (all || a.bijection == "deutsch") {
        reports.push_back(check_bijection(
            BijectionId::deutsch, {a.max, -1}, mode, lim));
    }
    if (a.ref) {
        Family fam = a.bijection == "schroder" ? Family::little_schroder
                     : a.bijection == "deutsch" ? Family::deutsch
                                                : Family::kimberling;
        reports.push_back(crosscheck_counts(
            fam, {a.max, a.max_j.value_or(a.max)}, *a.ref, lim));
    }

    bool pass = true;
    for (const auto& r : reports) {
        std::cout << (a.json ? to_json(r) + "\n" : to_text(r));
        pass = pass && r.pass();
    }
    return pass ? 0 : 1;
}

struct RenderArgs {
    std::string family;
    std::string input;
    std::string format = "ascii";
    std::optional<std::string> out;
};

int run_render(const RenderArgs& a) {
    bool svg = a.format == "svg";
    std::string drawing;
    auto looked = named_or_usage(family_from_name, a.family);
    if (!looked) return 2;
    switch (*looked) {
        case Family::little_schroder: {
            auto p = parse_schroder(a.input);
            drawing = svg ? render_svg(p) : render_ascii(p);
            break;
        }
        case Family::kimberling: {
            auto q = parse_kimberling(a.input);
            drawing = svg ? render_svg(q) : render_ascii(q);
            break;
        }
        case Family::deutsch: {
            auto p = parse_deutsch(a.input);
            drawing = svg ? render_svg(p) : render_ascii(p);
            break;
        }
        case Family::ramirez: {
            auto q = parse_ramirez(a.input);
            drawing = svg ? render_svg(q) : render_ascii(q);
            break;
        }
        default:
            std::cerr << "error: family " << a.family << " is not renderable\n";
            return 2;
    }
    if (a.out) {
        std::ofstream f(*a.out);
        if (!f) {
            std::cerr << "error: cannot open \"" << *a.out << "\" for writing\n";
            return 5;
        }
        f << drawing;
        f.flush();
        if (!f) {
            std::cerr << "error: write to \"" << *a.out << "\" failed\n";
            return 5;
        }
    } else {
        std::cout << drawing;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice-path bijections: enumerate, map, verify, render"};
    app.require_subcommand(1);

    EnumArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "list a family");
    enumerate->add_option("--family", ea.family, "object family")->required();
    enumerate->add_option("--n", ea.n, "size for one-parameter families");
    enumerate->add_option("--i", ea.i, "first size parameter");
    enumerate->add_option("--j", ea.j, "second size parameter");
    enumerate->add_option("--format", ea.format, "words or json")
        ->check(CLI::IsMember({"words", "json"}));

    MapArgs ma;
    auto* map = app.add_subcommand("map", "apply a bijection");
    map->add_option("--bijection", ma.bijection, "schroder, kimberling, deutsch")
        ->required();
    map->add_option("--direction", ma.direction, "forward or backward")
        ->required()
        ->check(CLI::IsMember({"forward", "backward"}));
    map->add_option("--input", ma.input, "object in canonical text form")
        ->required();
    map->add_option("--j", ma.j, "ambient j (kimberling forward only)");
    map->add_flag("--trace", ma.trace, "print rewriting/matching steps");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "exhaustive verification");
    verify->add_option("--bijection", va.bijection,
                       "schroder, kimberling, deutsch, or all")
        ->required();
    verify->add_option("--max", va.max, "size bound")->required();
    verify->add_option("--max-j", va.max_j, "j bound (kimberling)");
    verify->add_option("--ref", va.ref, "reference count file to crosscheck");
    verify->add_flag("--serial", va.serial, "use the serial reference kernel");
    verify->add_flag("--json", va.json, "emit JSON reports");

    RenderArgs ra;
    auto* render = app.add_subcommand("render", "draw a path");
    render->add_option("--family", ra.family, "path family")->required();
    render->add_option("--input", ra.input, "object in canonical text form")
        ->required();
    render->add_option("--format", ra.format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", ra.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*enumerate) return run_enumerate(ea);
        if (*map) return run_map(ma);
        if (*verify) return run_verify(va);
        if (*render) return run_render(ra);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
