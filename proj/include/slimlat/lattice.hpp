#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slimlat/errors.hpp"

namespace slimlat {

using Elem = int;  // positional index into FiniteLattice::ids()

// Finite lattice over opaque string identifiers. The cover relation is the
// input of record; the order relation and the meet/join tables are computed
// and validated at construction and never change afterwards. Instances are
// immutable and safe to share between threads.
class FiniteLattice {
 public:
  // Validates: distinct known identifiers, acyclic covers, transitive
  // reduction, unique meets/joins for every pair.
  static FiniteLattice build(std::vector<std::string> ids,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return n_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Elem x) const { return ids_[static_cast<size_t>(x)]; }
  Elem index(const std::string& id) const;          // UnknownElement if absent
  std::optional<Elem> find(const std::string& id) const;

  bool leq(Elem x, Elem y) const { return leq_[static_cast<size_t>(x) * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool covers(Elem lo, Elem hi) const;              // lo -< hi
  bool incomparable(Elem x, Elem y) const { return !leq(x, y) && !leq(y, x); }

  Elem meet(Elem x, Elem y) const { return meet_[static_cast<size_t>(x) * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[static_cast<size_t>(x) * n_ + y]; }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  const std::vector<Elem>& lower_covers(Elem x) const { return lower_[static_cast<size_t>(x)]; }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_[static_cast<size_t>(x)]; }
  const std::vector<std::pair<Elem, Elem>>& cover_pairs() const { return cover_pairs_; }

  // Cover pairs restated over identifiers, sorted; used by serialization.
  std::vector<std::pair<std::string, std::string>> cover_ids_sorted() const;

 private:
  FiniteLattice() = default;

  int n_ = 0;
  std::vector<std::string> ids_;
  std::vector<uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<std::vector<Elem>> lower_;
  std::vector<std::vector<Elem>> upper_;
  std::vector<std::pair<Elem, Elem>> cover_pairs_;
  Elem bottom_ = -1;
  Elem top_ = -1;
};

struct Interval {
  Elem lo;
  Elem hi;
  std::vector<Elem> members;  // ascending by index
};

// [lo, hi]; NotComparable unless lo <= hi.
Interval interval(const FiniteLattice& L, Elem lo, Elem hi);

std::pair<std::vector<Elem>, std::vector<Elem>> covers_of(const FiniteLattice& L, Elem x);

std::vector<Elem> join_irreducibles(const FiniteLattice& L);
std::vector<Elem> meet_irreducibles(const FiniteLattice& L);

bool is_chain_interval(const FiniteLattice& L, Elem lo, Elem hi);
bool is_semimodular(const FiniteLattice& L);
bool is_slim(const FiniteLattice& L);
bool is_distributive(const FiniteLattice& L);

std::vector<std::pair<Elem, Elem>> incomparable_pairs(const FiniteLattice& L);

bool is_sublattice(const FiniteLattice& L, const std::vector<Elem>& subset);

// Lattice with all covers reversed (order dual).
FiniteLattice dual_lattice(const FiniteLattice& L);

// Sublattice induced on `keep` (which must be meet/join closed is NOT
// required here: this takes the induced order and rebuilds covers; the
// caller decides whether that poset is the lattice it wants).
FiniteLattice induced_lattice(const FiniteLattice& L, const std::vector<Elem>& keep);

}  // namespace slimlat
