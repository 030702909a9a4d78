#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "media/graph.hpp"
#include "media/set_family.hpp"
#include "media/token_system.hpp"

namespace media {

using Rational = mpq_class;

// a*x + b*y + c = 0; the positive side is a*x + b*y + c > 0.
struct Line {
  Rational a, b, c;
  Rational eval(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
};

struct Point {
  Rational x, y;
};

// Lines are numbered 1..n in input order. Degenerate and repeated lines are rejected.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Line> lines);

  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& operator[](std::size_t i) const { return lines_.at(i); }
  // "1".."n".
  std::vector<std::string> line_names() const;

 private:
  std::vector<Line> lines_;
};

struct Region {
  std::vector<bool> positive;  // side per line
  Point witness;               // strictly inside
  ElementSet positive_set() const;
};

// Regions reached from a generic seed point by crossing facets, in discovery order.
// Throws InputError on an empty arrangement.
std::vector<Region> enumerate_regions(const Arrangement& arr);

// Does line k carry a facet of the region with the given side vector: is there an
// open piece of the line on which every other line keeps its side?
bool has_facet(const Arrangement& arr, const std::vector<bool>& positive, std::size_t k);

// Regions as vertices named by their positive sets; edges between regions on
// opposite sides of exactly one line that carries a facet of both. Edge labels are
// "+k" (towards the positive side of line k) and "-k"; vertex labels are the
// positive sets over line_names().
LabeledGraph region_adjacency(const Arrangement& arr, const std::vector<Region>& regions);

// {J_P} over line_names(), in region order.
SetFamily region_family(const Arrangement& arr, const std::vector<Region>& regions);

// States are regions; "+k" crosses line k to its positive side where it carries a
// facet, "-k" crosses back.
TokenSystem arrangement_medium(const Arrangement& arr);
TokenSystem arrangement_medium(const Arrangement& arr, const std::vector<Region>& regions);

enum class MosaicKind { triangular, truncated_square };
std::optional<MosaicKind> parse_mosaic_kind(const std::string& name);
const char* to_string(MosaicKind k);

// Lines of the chosen periodic family meeting the closed disk of the given radius
// about the origin. Triangular: y = j, y = 2x + 2i, y = -2x + 2k (an affine image of
// three pencils at 60 degrees; triple points where j = i + k). Truncated square:
// x = i, y = j, x + y = k, x - y = k. Throws InputError when radius < 1.
Arrangement mosaic_window(MosaicKind kind, int radius);

}  // namespace media
