#include "latbij/text.hpp"

#include <cctype>
#include <sstream>

#include "latbij/error.hpp"

namespace latbij {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int parse_positive_int(const std::string& tok, const char* what) {
    if (!all_digits(tok) || tok.size() > 9)
        fail(Errc::syntax, std::string("expected ") + what + ", got \"" + tok + "\"");
    int v = std::stoi(tok);
    if (v < 1)
        fail(Errc::syntax, std::string(what) + " must be positive, got \"" + tok + "\"");
    return v;
}

int parse_nonneg_int(const std::string& tok, const char* what) {
    std::size_t pos = tok[0] == '-' ? 1 : 0;
    if (pos >= tok.size() || !all_digits(tok.substr(pos)) || tok.size() > 9)
        fail(Errc::syntax, std::string("expected ") + what + ", got \"" + tok + "\"");
    return std::stoi(tok);
}

// Raises InvariantError naming the first violated clause.
template <class T>
T checked(T obj) {
    auto violations = validate(obj);
    if (!violations.empty()) fail(Errc::invariant, violations.front());
    return obj;
}

bool has_space(const std::string& text) {
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

}  // namespace

SchroderPath parse_schroder(const std::string& text) {
    SchroderPath p;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c != 'E' && c != 'N' && c != 'D')
            fail(Errc::syntax, std::string("step not E, N, or D: '") + c + "'");
        p.steps.push_back(c);
    }
    return checked(std::move(p));
}

KimberlingPath parse_kimberling(const std::string& text) {
    KimberlingPath q;
    for (const auto& tok : split_ws(text)) {
        auto comma = tok.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 >= tok.size())
            fail(Errc::syntax, "vertex token must be \"x,y\", got \"" + tok + "\"");
        Point v;
        v.x = parse_nonneg_int(tok.substr(0, comma), "x-coordinate");
        v.y = parse_nonneg_int(tok.substr(comma + 1), "y-coordinate");
        q.vertices.push_back(v);
    }
    if (q.vertices.empty())
        fail(Errc::syntax, "empty Kimberling path text");
    auto violations = validate(q);
    if (!violations.empty()) fail(Errc::malformed_path, violations.front());
    return q;
}

DeutschPath parse_deutsch(const std::string& text) {
    DeutschPath p;
    if (!has_space(text) && text.size() > 1) {
        // compact digit form, every downstep a single digit
        for (char c : text) {
            if (c == 'U') p.tokens.push_back(0);
            else if (c == 'D') p.tokens.push_back(1);
            else if (c >= '1' && c <= '9') p.tokens.push_back(c - '0');
            else fail(Errc::syntax, std::string("compact token not U, D, or 1-9: '") + c + "'");
        }
    } else {
        for (const auto& tok : split_ws(text)) {
            if (tok == "U") p.tokens.push_back(0);
            else if (tok == "D") p.tokens.push_back(1);
            else p.tokens.push_back(parse_positive_int(tok, "downstep size"));
        }
    }
    return checked(std::move(p));
}

RamirezPath parse_ramirez(const std::string& text) {
    RamirezPath q;
    if (!has_space(text) && text.size() > 1) {
        for (char c : text) {
            if (c == 'D') q.tokens.push_back(0);
            else if (c >= '1' && c <= '9') q.tokens.push_back(c - '0');
            else fail(Errc::syntax, std::string("compact token not D or 1-9: '") + c + "'");
        }
    } else {
        for (const auto& tok : split_ws(text)) {
            if (tok == "D") q.tokens.push_back(0);
            else q.tokens.push_back(parse_positive_int(tok, "upstep width"));
        }
    }
    return checked(std::move(q));
}

GrowthSeq parse_growth_seq(const std::string& text) {
    GrowthSeq g;
    for (const auto& tok : split_ws(text))
        g.u.push_back(parse_nonneg_int(tok, "entry"));
    return checked(std::move(g));
}

BoundedSeq parse_bounded_seq(const std::string& text, int ambient_j) {
    BoundedSeq s;
    s.ambient_j = ambient_j;
    auto tokens = split_ws(text);
    std::size_t start = 0;
    if (!tokens.empty() && tokens[0].rfind("j=", 0) == 0) {
        s.ambient_j = parse_nonneg_int(tokens[0].substr(2), "ambient j");
        start = 1;
    }
    for (std::size_t i = start; i < tokens.size(); ++i)
        s.u.push_back(parse_nonneg_int(tokens[i], "entry"));
    return checked(std::move(s));
}

MarkedHeightSeq parse_marked_heights(const std::string& text) {
    MarkedHeightSeq m;
    for (auto tok : split_ws(text)) {
        MarkedHeight h;
        if (!tok.empty() && tok.back() == 'd') {
            h.marked = true;
            tok.pop_back();
        }
        h.value = parse_positive_int(tok, "height");
        m.entries.push_back(h);
    }
    return checked(std::move(m));
}

std::string format(const SchroderPath& p) { return p.steps; }

std::string format(const KimberlingPath& q) {
    std::string out;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(q.vertices[i].x) + ',' + std::to_string(q.vertices[i].y);
    }
    return out;
}

std::string format(const DeutschPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
        if (i) out += ' ';
        out += p.tokens[i] == 0 ? "U" : std::to_string(p.tokens[i]);
    }
    return out;
}

std::string format(const RamirezPath& q) {
    std::string out;
    for (std::size_t i = 0; i < q.tokens.size(); ++i) {
        if (i) out += ' ';
        out += q.tokens[i] == 0 ? "D" : std::to_string(q.tokens[i]);
    }
    return out;
}

std::string format(const GrowthSeq& g) {
    std::string out;
    for (std::size_t i = 0; i < g.u.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(g.u[i]);
    }
    return out;
}

std::string format(const BoundedSeq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s.u[i]);
    }
    return out;
}

std::string format(const MarkedHeightSeq& m) {
    std::string out;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(m.entries[i].value);
        if (m.entries[i].marked) out += 'd';
    }
    return out;
}

}  // namespace latbij
