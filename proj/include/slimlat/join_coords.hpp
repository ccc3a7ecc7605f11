#pragma once

#include "slimlat/lattice.hpp"

namespace slimlat {

// Join coordinates of a slim lattice: Jir(L) split into two chains
// U = u(1)<...<u(m) and V = v(1)<...<v(n), with every x recovered as
// x = u(i_x) v v(j_x) (index 0 meaning the bottom) and the order matching
// the componentwise order on (i_x, j_x).
struct JoinCoordinates {
  std::vector<Elem> U;  // ascending
  std::vector<Elem> V;  // ascending; empty iff L is a chain
  std::vector<int> i;   // per element index
  std::vector<int> j;
};

// NotSlim if Jir(L) has no two-chain split. The split is deterministic:
// the greatest maximum chain of Jir becomes U; if the remainder is not a
// chain, an exact two-chain partition is computed instead.
JoinCoordinates join_coordinates(const FiniteLattice& L);

// Enforces every structural invariant of the type; Internal on violation.
void check_join_coordinates(const FiniteLattice& L, const JoinCoordinates& jc);

}  // namespace slimlat
