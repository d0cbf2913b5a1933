#include "latbij/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "latbij/error.hpp"

namespace latbij {

namespace {

// Unit-coordinate polyline of a path; every element is a step endpoint.
std::vector<Point> polyline(const SchroderPath& p) {
    std::vector<Point> v{{0, 0}};
    for (char c : p.steps) {
        Point q = v.back();
        if (c == 'E') ++q.x;
        else if (c == 'N') ++q.y;
        else { ++q.x; ++q.y; }
        v.push_back(q);
    }
    return v;
}

std::vector<Point> polyline(const KimberlingPath& q) { return q.vertices; }

std::vector<Point> polyline(const DeutschPath& p) {
    std::vector<Point> v{{0, 0}};
    for (int t : p.tokens) {
        Point q = v.back();
        ++q.x;
        q.y += (t == 0) ? 1 : -t;
        v.push_back(q);
    }
    return v;
}

std::vector<Point> polyline(const RamirezPath& p) {
    std::vector<Point> v{{0, 0}};
    for (int t : p.tokens) {
        Point q = v.back();
        q.x += (t == 0) ? 1 : t;
        q.y += (t == 0) ? -1 : 1;
        v.push_back(q);
    }
    return v;
}

struct Canvas {
    int xmax, ymax;
    std::vector<std::string> rows;

    Canvas(int xm, int ym)
        : xmax(xm), ymax(ym),
          rows(2 * ym + 1, std::string(2 * xm + 1, ' ')) {
        for (int y = 0; y <= ym; ++y)
            for (int x = 0; x <= xm; ++x) at(x, y) = '.';
    }

    char& cell(int col, int row) { return rows[row][col]; }
    // lattice point (x, y)
    char& at(int x, int y) { return cell(2 * x, 2 * (ymax - y)); }
};

void draw_segment(Canvas& c, Point a, Point b) {
    int dx = b.x - a.x, dy = b.y - a.y;
    int c0 = 2 * a.x, r0 = 2 * (c.ymax - a.y);
    int c1 = 2 * b.x, r1 = 2 * (c.ymax - b.y);
    if (dx == 1 && dy == 0) {
        c.cell(c0 + 1, r0) = '-';
    } else if (dx == 0 && dy == 1) {
        c.cell(c0, r0 - 1) = '|';
    } else if (dx == 1 && dy == 1) {
        c.cell(c0 + 1, r0 - 1) = '/';
    } else if (dx == 1 && dy == -1) {
        c.cell(c0 + 1, r0 + 1) = '\\';
    } else {
        // longer segment: gap-fill intermediate cells along the line
        int steps = std::max(std::abs(c1 - c0), std::abs(r1 - r0));
        for (int s = 1; s < steps; ++s) {
            int col = c0 + (c1 - c0) * s / steps;
            int row = r0 + (r1 - r0) * s / steps;
            if (col % 2 == 0 && row % 2 == 0 && c.cell(col, row) == '.')
                c.cell(col, row) = '*';
            else if (c.cell(col, row) == ' ')
                c.cell(col, row) = '*';
        }
    }
}

std::string ascii_of(const std::vector<Point>& pts) {
    int xmax = 0, ymax = 0;
    for (const auto& p : pts) {
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    Canvas c(xmax, ymax);
    for (std::size_t i = 1; i < pts.size(); ++i)
        draw_segment(c, pts[i - 1], pts[i]);
    for (const auto& p : pts) c.at(p.x, p.y) = 'o';

    std::string out;
    for (auto row : c.rows) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

std::string svg_of(const std::vector<Point>& pts) {
    constexpr int kScale = 20;
    constexpr int kMargin = 10;
    int xmax = 0, ymax = 0;
    for (const auto& p : pts) {
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    auto px = [&](int x) { return kMargin + kScale * x; };
    auto py = [&](int y) { return kMargin + kScale * (ymax - y); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << px(xmax) + kMargin << "\" height=\"" << py(0) + kMargin << "\">\n";
    for (int x = 0; x <= xmax; ++x)
        out << "  <line x1=\"" << px(x) << "\" y1=\"" << py(ymax)
            << "\" x2=\"" << px(x) << "\" y2=\"" << py(0)
            << "\" stroke=\"#dddddd\"/>\n";
    for (int y = 0; y <= ymax; ++y)
        out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
            << px(xmax) << "\" y2=\"" << py(y) << "\" stroke=\"#dddddd\"/>\n";
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << px(pts[i].x) << ',' << py(pts[i].y);
    }
    out << "\" fill=\"none\" stroke=\"#2255bb\" stroke-width=\"2\"/>\n";
    for (const auto& p : pts)
        out << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
            << "\" r=\"3\" fill=\"#2255bb\"/>\n";
    out << "</svg>\n";
    return out.str();
}

template <class T>
std::string checked_ascii(const T& obj) {
    auto v = validate(obj);
    if (!v.empty()) fail(Errc::invariant, v.front());
    return ascii_of(polyline(obj));
}

template <class T>
std::string checked_svg(const T& obj) {
    auto v = validate(obj);
    if (!v.empty()) fail(Errc::invariant, v.front());
    return svg_of(polyline(obj));
}

}  // namespace

std::string render_ascii(const SchroderPath& p) { return checked_ascii(p); }
std::string render_ascii(const KimberlingPath& q) { return checked_ascii(q); }
std::string render_ascii(const DeutschPath& p) { return checked_ascii(p); }
std::string render_ascii(const RamirezPath& q) { return checked_ascii(q); }

std::string render_svg(const SchroderPath& p) { return checked_svg(p); }
std::string render_svg(const KimberlingPath& q) { return checked_svg(q); }
std::string render_svg(const DeutschPath& p) { return checked_svg(p); }
std::string render_svg(const RamirezPath& q) { return checked_svg(q); }

}  // namespace latbij
