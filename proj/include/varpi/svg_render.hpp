#pragma once

#include <optional>
#include <string>

#include "varpi/pivalue.hpp"

namespace varpi {

// SVG picture of the unit circle (512-sample closed polyline) with axes in
// the fixed viewBox "-1.6 -1.6 3.2 3.2". When certificates are given, the
// inscribed hexagon and the circumscribed parallelogram (the unit square of
// the normalized coordinates, drawn in the original ones) are overlaid with
// distinct strokes.
std::string render_svg(const NormSpec& norm, const std::optional<HexagonCertificate>& hexagon,
                       const std::optional<NormalizationCertificate>& parallelogram);

}  // namespace varpi
