#ifndef LATBIJ_RENDER_HPP
#define LATBIJ_RENDER_HPP

#include <string>

#include "latbij/paths.hpp"

namespace latbij {

// Deterministic drawings: identical input gives byte-identical output.
// ASCII uses a character grid with two columns per unit square; unit steps
// draw as '-', '|', '/', '\', longer segments are gap-filled with '*'.
// SVG uses integer-scaled coordinates (20 px per unit, 10 px margin).

std::string render_ascii(const SchroderPath& p);
std::string render_ascii(const KimberlingPath& q);
std::string render_ascii(const DeutschPath& p);
std::string render_ascii(const RamirezPath& q);

std::string render_svg(const SchroderPath& p);
std::string render_svg(const KimberlingPath& q);
std::string render_svg(const DeutschPath& p);
std::string render_svg(const RamirezPath& q);

}  // namespace latbij

#endif
