#pragma once

#include <string>

#include "slimlat/lattice.hpp"

namespace slimlat {

struct CanonicalForm {
  std::string digest;  // equal iff the lattices are isomorphic

  bool operator==(const CanonicalForm& o) const { return digest == o.digest; }
  bool operator<(const CanonicalForm& o) const { return digest < o.digest; }
};

// Canonical labeling: iterated structural color refinement, then exhaustive
// search over color-respecting orders for the lexicographically smallest
// cover matrix. Exact (no hashing), deterministic.
CanonicalForm canonical_form(const FiniteLattice& L);

}  // namespace slimlat
