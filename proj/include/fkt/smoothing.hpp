#pragma once

#include "fkt/diagram.hpp"

namespace fkt {

// The two framing-respecting resolutions of a crossing.
enum class SmoothingChoice { split, reverse };

enum class SmoothingQuality { good, bad };

// Resolve crossing `label`.  On one component, `split` cuts the word into
// its two between-occurrence segments and `reverse` joins them with one
// segment reversed.  Across two components, `split` concatenates the two
// punctured words and `reverse` concatenates with the second reversed.
Diagram smooth(const Diagram& d, int label, SmoothingChoice choice);

// Erase both occurrences of a crossing; component structure unchanged.
Diagram delete_chord(const Diagram& d, int label);

// good iff the smoothing does not increase the number of components.
SmoothingQuality classify_smoothing(const Diagram& d, int label, SmoothingChoice choice);

}  // namespace fkt
