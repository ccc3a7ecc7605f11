#include "slimlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace slimlat {

const char* err_name(Err e) {
  switch (e) {
    case Err::Cycle: return "CycleError";
    case Err::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case Err::NotALattice: return "NotALattice";
    case Err::UnknownElement: return "UnknownElement";
    case Err::NotComparable: return "NotComparable";
    case Err::EmptySet: return "EmptySet";
    case Err::SingletonChain: return "SingletonChain";
    case Err::NotSlim: return "NotSlim";
    case Err::NotSemimodular: return "NotSemimodular";
    case Err::NotACell: return "NotACell";
    case Err::NotDistributiveCell: return "NotDistributiveCell";
    case Err::BadMultiplicity: return "BadMultiplicity";
    case Err::NotACorner: return "NotACorner";
    case Err::LayoutInvalid: return "LayoutInvalid";
    case Err::NotIncomparable: return "NotIncomparable";
    case Err::SizeBound: return "SizeBound";
    case Err::SizeTooLarge: return "SizeTooLarge";
    case Err::NotSublattice: return "NotSublattice";
    case Err::NotARetraction: return "NotARetraction";
    case Err::PatternMismatch: return "PatternMismatch";
    case Err::MalformedRecipe: return "MalformedRecipe";
    case Err::Schema: return "SchemaError";
    case Err::Io: return "IoError";
    case Err::Internal: return "InternalError";
  }
  return "UnknownError";
}

FiniteLattice FiniteLattice::build(std::vector<std::string> ids,
                                   const std::vector<std::pair<std::string, std::string>>& covers) {
  FiniteLattice L;
  if (ids.empty()) fail(Err::NotALattice, "empty element set");
  L.ids_ = std::move(ids);
  L.n_ = static_cast<int>(L.ids_.size());
  const int n = L.n_;

  std::map<std::string, Elem> pos;
  for (int i = 0; i < n; ++i) {
    if (!pos.emplace(L.ids_[static_cast<size_t>(i)], i).second)
      fail(Err::Schema, "duplicate element identifier '" + L.ids_[static_cast<size_t>(i)] + "'");
  }

  L.lower_.assign(static_cast<size_t>(n), {});
  L.upper_.assign(static_cast<size_t>(n), {});
  std::set<std::pair<Elem, Elem>> seen;
  for (const auto& [a, b] : covers) {
    auto ia = pos.find(a);
    auto ib = pos.find(b);
    if (ia == pos.end()) fail(Err::UnknownElement, "cover references unknown element '" + a + "'");
    if (ib == pos.end()) fail(Err::UnknownElement, "cover references unknown element '" + b + "'");
    if (ia->second == ib->second) fail(Err::Cycle, "self cover on '" + a + "'");
    if (!seen.emplace(ia->second, ib->second).second) continue;
    L.lower_[static_cast<size_t>(ib->second)].push_back(ia->second);
    L.upper_[static_cast<size_t>(ia->second)].push_back(ib->second);
    L.cover_pairs_.emplace_back(ia->second, ib->second);
  }
  for (auto& v : L.lower_) std::sort(v.begin(), v.end());
  for (auto& v : L.upper_) std::sort(v.begin(), v.end());
  std::sort(L.cover_pairs_.begin(), L.cover_pairs_.end());

  // Reflexive-transitive closure; cycle detection via Kahn's algorithm.
  {
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = static_cast<int>(L.lower_[static_cast<size_t>(v)].size());
    std::vector<Elem> order;
    for (int v = 0; v < n; ++v)
      if (indeg[static_cast<size_t>(v)] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head) {
      Elem v = order[head];
      for (Elem w : L.upper_[static_cast<size_t>(v)])
        if (--indeg[static_cast<size_t>(w)] == 0) order.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) fail(Err::Cycle, "cover relation contains a cycle");

    L.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v) L.leq_[static_cast<size_t>(v) * n + v] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Elem v = *it;
      for (Elem w : L.upper_[static_cast<size_t>(v)])
        for (int t = 0; t < n; ++t)
          if (L.leq_[static_cast<size_t>(w) * n + t]) L.leq_[static_cast<size_t>(v) * n + t] = 1;
    }
  }

  // Transitive reduction: a cover pair must not be implied by a 2-step path.
  for (const auto& [a, b] : L.cover_pairs_) {
    for (int z = 0; z < n; ++z) {
      if (z == a || z == b) continue;
      if (L.leq(a, z) && L.leq(z, b))
        fail(Err::NotTransitivelyReduced,
             "cover (" + L.id(a) + "," + L.id(b) + ") is implied via '" + L.id(z) + "'");
    }
  }

  // Meet/join tables with uniqueness validation.
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      Elem m = -1;
      for (int z = 0; z < n; ++z) {
        if (!L.leq(z, x) || !L.leq(z, y)) continue;
        if (m < 0 || L.leq(m, z)) m = z;
      }
      if (m >= 0)
        for (int z = 0; z < n; ++z)
          if (L.leq(z, x) && L.leq(z, y) && !L.leq(z, m)) m = -1;
      if (m < 0)
        fail(Err::NotALattice,
             "pair (" + L.id(x) + "," + L.id(y) + ") has no unique greatest lower bound");
      Elem j = -1;
      for (int z = 0; z < n; ++z) {
        if (!L.leq(x, z) || !L.leq(y, z)) continue;
        if (j < 0 || L.leq(z, j)) j = z;
      }
      if (j >= 0)
        for (int z = 0; z < n; ++z)
          if (L.leq(x, z) && L.leq(y, z) && !L.leq(j, z)) j = -1;
      if (j < 0)
        fail(Err::NotALattice,
             "pair (" + L.id(x) + "," + L.id(y) + ") has no unique least upper bound");
      L.meet_[static_cast<size_t>(x) * n + y] = L.meet_[static_cast<size_t>(y) * n + x] = m;
      L.join_[static_cast<size_t>(x) * n + y] = L.join_[static_cast<size_t>(y) * n + x] = j;
    }
  }

  L.bottom_ = 0;
  L.top_ = 0;
  for (int x = 0; x < n; ++x) {
    L.bottom_ = L.meet(L.bottom_, x);
    L.top_ = L.join(L.top_, x);
  }
  return L;
}

Elem FiniteLattice::index(const std::string& id) const {
  auto e = find(id);
  if (!e) fail(Err::UnknownElement, "unknown element '" + id + "'");
  return *e;
}

std::optional<Elem> FiniteLattice::find(const std::string& id) const {
  for (int i = 0; i < n_; ++i)
    if (ids_[static_cast<size_t>(i)] == id) return i;
  return std::nullopt;
}

bool FiniteLattice::covers(Elem lo, Elem hi) const {
  const auto& ups = upper_[static_cast<size_t>(lo)];
  return std::find(ups.begin(), ups.end(), hi) != ups.end();
}

std::vector<std::pair<std::string, std::string>> FiniteLattice::cover_ids_sorted() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(cover_pairs_.size());
  for (const auto& [a, b] : cover_pairs_) out.emplace_back(id(a), id(b));
  std::sort(out.begin(), out.end());
  return out;
}

Interval interval(const FiniteLattice& L, Elem lo, Elem hi) {
  if (!L.leq(lo, hi))
    fail(Err::NotComparable, "'" + L.id(lo) + "' is not below '" + L.id(hi) + "'");
  Interval iv{lo, hi, {}};
  for (int z = 0; z < L.size(); ++z)
    if (L.leq(lo, z) && L.leq(z, hi)) iv.members.push_back(z);
  return iv;
}

std::pair<std::vector<Elem>, std::vector<Elem>> covers_of(const FiniteLattice& L, Elem x) {
  return {L.lower_covers(x), L.upper_covers(x)};
}

std::vector<Elem> join_irreducibles(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (int x = 0; x < L.size(); ++x)
    if (x != L.bottom() && L.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Elem> meet_irreducibles(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (int x = 0; x < L.size(); ++x)
    if (x != L.top() && L.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

bool is_chain_interval(const FiniteLattice& L, Elem lo, Elem hi) {
  Interval iv = interval(L, lo, hi);
  for (size_t i = 0; i < iv.members.size(); ++i)
    for (size_t j = i + 1; j < iv.members.size(); ++j)
      if (L.incomparable(iv.members[i], iv.members[j])) return false;
  return true;
}

bool is_semimodular(const FiniteLattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (a == b) continue;
      if (L.covers(L.meet(a, b), a) && !L.covers(b, L.join(a, b))) return false;
    }
  return true;
}

bool is_slim(const FiniteLattice& L) {
  // Width of Jir(L) is at most 2, i.e. no 3-element antichain.
  auto jir = join_irreducibles(L);
  for (size_t i = 0; i < jir.size(); ++i)
    for (size_t j = i + 1; j < jir.size(); ++j) {
      if (!L.incomparable(jir[i], jir[j])) continue;
      for (size_t k = j + 1; k < jir.size(); ++k)
        if (L.incomparable(jir[i], jir[k]) && L.incomparable(jir[j], jir[k])) return false;
    }
  return true;
}

bool is_distributive(const FiniteLattice& L) {
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      for (int z = 0; z < L.size(); ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

std::vector<std::pair<Elem, Elem>> incomparable_pairs(const FiniteLattice& L) {
  std::vector<std::pair<Elem, Elem>> out;
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b)
      if (L.incomparable(a, b)) out.emplace_back(a, b);
  return out;
}

bool is_sublattice(const FiniteLattice& L, const std::vector<Elem>& subset) {
  if (subset.empty()) fail(Err::EmptySet, "sublattice test on empty set");
  std::vector<uint8_t> in(static_cast<size_t>(L.size()), 0);
  for (Elem x : subset) in[static_cast<size_t>(x)] = 1;
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i; j < subset.size(); ++j) {
      if (!in[static_cast<size_t>(L.meet(subset[i], subset[j]))]) return false;
      if (!in[static_cast<size_t>(L.join(subset[i], subset[j]))]) return false;
    }
  return true;
}

FiniteLattice dual_lattice(const FiniteLattice& L) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : L.cover_pairs()) covers.emplace_back(L.id(b), L.id(a));
  return FiniteLattice::build(L.ids(), covers);
}

FiniteLattice induced_lattice(const FiniteLattice& L, const std::vector<Elem>& keep) {
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (Elem x : keep) ids.push_back(L.id(x));
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) {
      if (i == j || !L.lt(keep[i], keep[j])) continue;
      bool cover = true;
      for (size_t k = 0; k < keep.size() && cover; ++k)
        if (k != i && k != j && L.lt(keep[i], keep[k]) && L.lt(keep[k], keep[j])) cover = false;
      if (cover) covers.emplace_back(L.id(keep[i]), L.id(keep[j]));
    }
  return FiniteLattice::build(std::move(ids), covers);
}

}  // namespace slimlat
