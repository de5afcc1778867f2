#pragma once

#include <string>

#include "fkt/complex.hpp"

namespace fkt {

// JSON file format: darts (list of ids or a count), alpha {pairs, free},
// sigma (dart cycles), optional twists, optional boundary {code,
// crossing_map}, lines, cusps, triples.  See README for the full shape.
StandardComplex parse_complex_text(const std::string& json_text);
StandardComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const StandardComplex& k);
void write_complex_file(const StandardComplex& k, const std::string& path);

}  // namespace fkt
