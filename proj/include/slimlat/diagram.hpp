#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slimlat/join_coords.hpp"
#include "slimlat/lattice.hpp"
#include "slimlat/rational.hpp"

namespace slimlat {

enum class Slope { NormalUp, NormalDown, Precipitous };
enum class Direction { NW, NE, SW, SE };

Direction opposite(Direction d);
Direction perpendicular_up(Direction d);  // NW <-> NE for the upward pair
const char* direction_name(Direction d);

struct DiagramLayout {
  std::vector<Point> pos;  // aligned with element indices

  const Point& at(Elem x) const { return pos[static_cast<size_t>(x)]; }
};

struct Violation {
  std::string check;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Edge direction for a cover pair under a layout; LayoutInvalid when the
// segment does not rise within the normal angle range.
Slope classify_edge(const DiagramLayout& lay, Elem lo, Elem hi);

// position(x) = (j - i, j + i) from the join coordinates; validates the
// result and throws LayoutInvalid (with the violated rule) on failure.
DiagramLayout layout_join_coords(const FiniteLattice& L, const JoinCoordinates& jc);

// As above but computes the coordinates itself.
DiagramLayout compute_layout(const FiniteLattice& L);

// All structural diagram rules, reported rather than thrown: distinct
// positions, rising edges, angle range, the edge rule (lower end interior
// meet-irreducible iff precipitous), cone-order equivalence, planarity.
Report validate_c1(const FiniteLattice& L, const DiagramLayout& lay);

std::pair<std::vector<Elem>, std::vector<Elem>> boundary_chains(const FiniteLattice& L,
                                                                const DiagramLayout& lay);

bool on_boundary(const FiniteLattice& L, const DiagramLayout& lay, Elem x);

// Elements other than u lying exactly on the ray of normal slope from u,
// nearest first.
std::vector<Elem> ray_elements(const FiniteLattice& L, const DiagramLayout& lay, Elem u,
                               Direction d);

bool cone_leq(const Point& b, const Point& c);

// u strictly to the left of every maximal chain through v; NotIncomparable
// unless u || v.
bool left_of(const FiniteLattice& L, const DiagramLayout& lay, Elem u, Elem v);

// The meet property for one incomparable pair: both intervals chains, each
// of one normal slope, slopes orthogonal, interiors meet-reducible.
Report regular_meet_check(const FiniteLattice& L, const DiagramLayout& lay, Elem a, Elem b);

Report theorem_part_i_check(const FiniteLattice& L);
Report theorem_part_ii_check(const FiniteLattice& L, const DiagramLayout& lay);

struct Marks {
  std::vector<Elem> black;
  std::vector<Elem> stars;
};

std::string emit_svg(const FiniteLattice& L, const DiagramLayout& lay,
                     const Marks* marks = nullptr);
std::string emit_tikz(const FiniteLattice& L, const DiagramLayout& lay,
                      const Marks* marks = nullptr);

}  // namespace slimlat
