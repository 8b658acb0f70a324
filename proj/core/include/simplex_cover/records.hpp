#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "simplex_cover/cover.hpp"
#include "simplex_cover/witness.hpp"

namespace simplex_cover {

/// One cover element as a single JSON line:
///   {"kind":"base_b","v":[1,0],"pi":[2,1],"anchor":["1","1/4"]}
/// `pi` is one-based, anchors are canonical rational strings.
std::string to_record(const CoverElement& element);

/// Inverse of to_record for a cover of S^{n+delta(n)}. The anchor must match
/// the kind's formula exactly; throws ParseError otherwise.
CoverElement parse_record(std::string_view line, int n);

/// JSON-lines, one record per element in cover order.
void write_cover(std::ostream& out, const CoverSpec& cover);
CoverSpec read_cover(std::istream& in, int d, int n);

/// {"route":..., "kind":..., "v":[...], "pi":[...], "anchor":[...], "w":[...]}
std::string to_json(const WitnessResult& result);

}  // namespace simplex_cover
