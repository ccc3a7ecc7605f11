#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slimlat/canonical.hpp"
#include "slimlat/diagram.hpp"
#include "slimlat/join_coords.hpp"
#include "slimlat/lattice.hpp"

namespace slimlat {

struct SslDiagram {
  FiniteLattice lattice;
  DiagramLayout layout;
};

struct FourCell {
  Elem o, a, b, t;  // bottom, left, right, top; a strictly left of b
};

// C_m x C_k with identifiers "r,s"; SingletonChain unless m,k >= 2.
SslDiagram grid(int m, int k);

// All covering squares whose quadrilateral has empty interior, sorted by
// (top id, left id).
std::vector<FourCell> four_cells(const FiniteLattice& L, const DiagramLayout& lay);

// True iff the principal ideal of the cell top is distributive. NotACell if
// the cell is not one of four_cells(L, lay).
bool is_distributive_cell(const FiniteLattice& L, const DiagramLayout& lay, const FourCell& cell);

// n-fold multifork extension at a distributive 4-cell. New identifiers are
// prefixed with `id_prefix` (recipes use "f<step>:"). The construction
// checks every postcondition on its output: slim, semimodular, order and
// meet restriction to old elements, exactly n new meet-irreducibles with
// grid ideals and precipitous interior top edges, length growth by n.
SslDiagram multifork_extend(const FiniteLattice& L, const DiagramLayout& lay, const FourCell& cell,
                            int n, const std::string& id_prefix);

// Doubly irreducible boundary elements whose unique upper cover has exactly
// two lower covers; sorted by identifier.
std::vector<Elem> corners(const FiniteLattice& L, const DiagramLayout& lay);

// Removes a corner, keeping the positions of the surviving elements.
SslDiagram remove_corner(const FiniteLattice& L, const DiagramLayout& lay, Elem w);

struct MultiforkStep {
  std::string cell_left;
  std::string cell_top;
  int n = 1;
};

struct RecipeStep {
  std::optional<MultiforkStep> fork;    // exactly one of the two is set
  std::optional<std::string> removal;
};

struct ConstructionRecipe {
  int grid_m = 2;
  int grid_k = 2;
  std::vector<RecipeStep> steps;  // all forks precede all removals
};

// Deterministic replay. Grids [1,1] and [1,2] are accepted as the recipes
// of the special-cased one- and two-element lattices (no steps allowed).
SslDiagram replay(const ConstructionRecipe& recipe);

struct Generated {
  FiniteLattice lattice;
  DiagramLayout layout;
  ConstructionRecipe recipe;
  CanonicalForm canon;
};

// Exhaustive isomorphism-deduplicated generation of the slim semimodular
// lattices with at most max_size elements: grids, multifork extensions,
// corner removals, plus the special-cased one- and two-element lattices.
// Deterministic order: (grid area, elements added by forks, removals).
std::vector<Generated> generate_ssl(int max_size);

// Independent oracle: every lattice with at most max_size elements up to
// isomorphism, by direct meet-semilattice extension with canonical-form
// pruning. SizeTooLarge above 8.
std::vector<FiniteLattice> exhaustive_small_lattices(int max_size);

}  // namespace slimlat
