#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "slimlat/lattice.hpp"

namespace slimlat {

// Total map between (possibly equal) lattices, assignment[x in source] = element of target.
struct LatticeMap {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<Elem> assignment;

  Elem operator()(Elem x) const { return assignment[static_cast<size_t>(x)]; }
};

bool is_homomorphism(const LatticeMap& m);
bool is_embedding(const LatticeMap& m);  // injective + meet/join preserving

struct Retraction {
  LatticeMap map;              // source == target
  std::vector<Elem> image;     // ascending; equals the fixed-point set
};

// All embeddings of K into L in deterministic backtracking order. With a
// constraint (A, S), only embeddings with g(A) contained in S are produced.
// The callback may return false to stop the enumeration.
void enumerate_embeddings(const FiniteLattice& K, const FiniteLattice& L,
                          const std::vector<Elem>* constraintA, const std::vector<Elem>* constraintS,
                          const std::function<bool(const LatticeMap&)>& sink);

std::vector<LatticeMap> all_embeddings(const FiniteLattice& K, const FiniteLattice& L);

inline constexpr int kRetractionSizeBound = 14;

// All idempotent lattice endomorphisms, deterministic order, each revalidated
// by an independent direct check before emission. SizeBound above the limit.
std::vector<Retraction> enumerate_retractions(const FiniteLattice& L,
                                              int size_bound = kRetractionSizeBound);

// Deduplicated retract images (each a sublattice), sorted.
std::vector<std::vector<Elem>> retracts(const FiniteLattice& L,
                                        int size_bound = kRetractionSizeBound);

// Witness retraction with image exactly S, if one exists. NotSublattice if S
// is not a sublattice.
std::optional<Retraction> is_retract(const FiniteLattice& L, const std::vector<Elem>& S);

// Collapses each block to its marked element; NotARetraction if the induced
// map is not a retraction.
struct CogwheelBlock {
  std::vector<Elem> members;
  Elem marked;
};
Retraction cogwheel_retraction(const FiniteLattice& L, const std::vector<CogwheelBlock>& blocks);

}  // namespace slimlat
