#pragma once

// SVG 1.1 and standalone TikZ emitters for the resolved polygon, the boundary
// strings and the ruling diagram.

#include "wpp/resolution.hpp"

#include <string>

namespace wpp::render {

enum class What { Polygon, Strings, Ruling };
enum class Format { Svg, Tikz };

What parse_what(const std::string& s);      ///< std::invalid_argument on bad input
Format parse_format(const std::string& s);  ///< std::invalid_argument on bad input

/// Polygon coordinates are exact: SVG user units are the rational coordinates
/// times the declared integer scale (the lcm of all denominators times a
/// base factor), TikZ coordinates are written as fractions.
std::string render(const resolution::ResolutionPair& R, What what, Format format);

}  // namespace wpp::render
