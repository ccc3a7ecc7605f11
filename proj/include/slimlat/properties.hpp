#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slimlat/json_io.hpp"
#include "slimlat/lattice.hpp"
#include "slimlat/morphisms.hpp"

namespace slimlat {

// Pattern lattice K with a marked sublattice A (drawn black) and a nonempty
// star set X: a sublattice S of L satisfies the property when every
// embedding of K into L that lands A inside S also lands X inside S.
struct AbsorptionPattern {
  std::string name;
  FiniteLattice K;
  std::vector<Elem> A;
  std::vector<Elem> X;
};

struct PatternVerdict {
  bool holds = true;
  std::optional<LatticeMap> witness;  // embedding with g(A) in S, g(X) not
  std::optional<Elem> escaped_star;   // the K-element whose image escapes
};

AbsorptionPattern builtin_pattern_p81();
AbsorptionPattern builtin_pattern_p92();

// Pattern JSON: {"name":..,"lattice":{..},"black":[..],"stars":[..]}.
// Gate-checks: K slim semimodular, A a sublattice, X nonempty.
AbsorptionPattern load_pattern(const Json& j);
Json pattern_to_json(const AbsorptionPattern& p);

// Reverses all covers of K; A and X are carried over unchanged.
AbsorptionPattern dual_pattern(const AbsorptionPattern& p);

PatternVerdict satisfies_absorption(const FiniteLattice& L, const std::vector<Elem>& S,
                                    const AbsorptionPattern& p);

struct RetractsPropertyFailure {
  std::vector<Elem> retract;
  LatticeMap witness;
  Elem escaped_star;
};

struct RetractsPropertyReport {
  std::vector<RetractsPropertyFailure> failures;
  int retracts_checked = 0;
  bool ok() const { return failures.empty(); }
};

RetractsPropertyReport check_retracts_property(const FiniteLattice& L, const AbsorptionPattern& p,
                                               int size_bound = kRetractionSizeBound);

// Monotonicity in X: if the stronger pattern holds for (L, S), the weaker
// one must as well. Returns whether the implication held.
bool pattern_strength_check(const FiniteLattice& L, const std::vector<Elem>& S,
                            const AbsorptionPattern& p, const AbsorptionPattern& p_bigger);

}  // namespace slimlat
