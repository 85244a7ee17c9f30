#pragma once

#include <string>

#include "annulus/series.hpp"

namespace annulus {

/// Series file format: {"N": int, "a_pos": [[re, im], ...], "b_pos", "a_neg",
/// "b_neg", "a0": [re, im], "b0": [re, im]}. Entry i of a *_pos array is mode
/// i + 1, of a *_neg array mode -(i + 1). Missing arrays are zero.
std::string series_to_json(const HarmonicSeries& h);
HarmonicSeries series_from_json(const std::string& text);

HarmonicSeries load_series(const std::string& path);
void save_series(const HarmonicSeries& h, const std::string& path);

}  // namespace annulus
