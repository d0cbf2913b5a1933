#ifndef LATBIJ_TEXT_HPP
#define LATBIJ_TEXT_HPP

#include <string>

#include "latbij/paths.hpp"

namespace latbij {

// Bit-exact text grammars, one object per line:
//   schroder     concatenated letters, e.g. "EDENEDNDDNEN"
//   kimberling   vertices "x,y" separated by single spaces, starting "0,0"
//   deutsch      tokens "U" or a positive integer, space-separated
//   ramirez      tokens "D" or a positive integer, space-separated
//   growth-seq   integers separated by single spaces
//   bounded-seq  integers separated by single spaces (ambient j is external)
//   heights      debug tokens like "4" and "4d", space-separated
//
// Deutsch and Ramirez input without spaces is read as the compact digit form
// ("UUU12", "31D12D2DDD"), valid only while every step size is a single
// digit; "D" in a Deutsch word is an alias for a unit downstep.

SchroderPath parse_schroder(const std::string& text);
KimberlingPath parse_kimberling(const std::string& text);
DeutschPath parse_deutsch(const std::string& text);
RamirezPath parse_ramirez(const std::string& text);
GrowthSeq parse_growth_seq(const std::string& text);
// Accepts an optional leading "j=<int>" header token; otherwise the ambient
// bound comes from the second argument.
BoundedSeq parse_bounded_seq(const std::string& text, int ambient_j);
MarkedHeightSeq parse_marked_heights(const std::string& text);

std::string format(const SchroderPath& p);
std::string format(const KimberlingPath& q);
std::string format(const DeutschPath& p);
std::string format(const RamirezPath& q);
std::string format(const GrowthSeq& g);
std::string format(const BoundedSeq& s);
std::string format(const MarkedHeightSeq& m);

}  // namespace latbij

#endif
