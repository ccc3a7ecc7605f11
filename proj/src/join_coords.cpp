#include "slimlat/join_coords.hpp"

#include <algorithm>
#include <functional>

namespace slimlat {

namespace {

bool chain_sorted(const FiniteLattice& L, std::vector<Elem>& v) {
  std::sort(v.begin(), v.end(), [&](Elem a, Elem b) { return L.lt(a, b); });
  for (size_t k = 0; k + 1 < v.size(); ++k)
    if (!L.lt(v[k], v[k + 1])) return false;
  return true;
}

// Greatest maximum chain of the Jir subposet, compared bottom-up by
// identifier sequence. Walks greedily along Hasse steps of the subposet.
std::vector<Elem> greatest_max_chain(const FiniteLattice& L, const std::vector<Elem>& jir) {
  const size_t m = jir.size();
  std::vector<std::vector<size_t>> up(m);  // Hasse successors within jir
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      if (a == b || !L.lt(jir[a], jir[b])) continue;
      bool step = true;
      for (size_t c = 0; c < m && step; ++c)
        if (c != a && c != b && L.lt(jir[a], jir[c]) && L.lt(jir[c], jir[b])) step = false;
      if (step) up[a].push_back(b);
    }
  std::vector<int> len(m, 1);  // longest chain starting here, going up
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < m; ++a)
      for (size_t b : up[a])
        if (len[b] + 1 > len[a]) {
          len[a] = len[b] + 1;
          changed = true;
        }
  }
  int best = 0;
  for (size_t a = 0; a < m; ++a) best = std::max(best, len[a]);

  std::vector<Elem> chain;
  size_t at = m;
  for (size_t a = 0; a < m; ++a) {
    if (len[a] != best) continue;
    bool minimal = true;  // chain must start at a minimal element of max chains
    if (at != m && L.id(jir[a]) <= L.id(jir[at])) minimal = false;
    if (minimal) at = a;
  }
  chain.push_back(jir[at]);
  int remaining = best - 1;
  while (remaining > 0) {
    size_t next = m;
    for (size_t b : up[at]) {
      if (len[b] != remaining) continue;
      if (next == m || L.id(jir[b]) > L.id(jir[next])) next = b;
    }
    at = next;
    chain.push_back(jir[at]);
    --remaining;
  }
  return chain;
}

// Exact two-chain partition of a width <= 2 poset via augmenting paths on
// the comparability graph (minimum chain cover). Deterministic.
bool two_chain_partition(const FiniteLattice& L, const std::vector<Elem>& jir,
                         std::vector<Elem>& U, std::vector<Elem>& V) {
  const size_t m = jir.size();
  std::vector<std::vector<size_t>> succ(m);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      if (a != b && L.lt(jir[a], jir[b])) succ[a].push_back(b);

  std::vector<int> match_to(m, -1), match_from(m, -1);
  std::vector<uint8_t> vis;
  std::function<bool(size_t)> augment = [&](size_t a) -> bool {
    for (size_t b : succ[a]) {
      if (vis[b]) continue;
      vis[b] = 1;
      if (match_from[b] < 0 || augment(static_cast<size_t>(match_from[b]))) {
        match_to[a] = static_cast<int>(b);
        match_from[b] = static_cast<int>(a);
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (size_t a = 0; a < m; ++a) {
    vis.assign(m, 0);
    if (augment(a)) ++matched;
  }
  if (static_cast<int>(m) - matched > 2) return false;

  std::vector<uint8_t> is_head(m, 1);
  for (size_t a = 0; a < m; ++a)
    if (match_to[a] >= 0) is_head[static_cast<size_t>(match_to[a])] = 0;
  std::vector<std::vector<Elem>> chains;
  for (size_t a = 0; a < m; ++a) {
    if (!is_head[a]) continue;
    std::vector<Elem> c;
    int at = static_cast<int>(a);
    while (at >= 0) {
      c.push_back(jir[static_cast<size_t>(at)]);
      at = match_to[static_cast<size_t>(at)];
    }
    chains.push_back(std::move(c));
  }
  if (chains.size() > 2) return false;
  U = chains.empty() ? std::vector<Elem>{} : chains[0];
  V = chains.size() > 1 ? chains[1] : std::vector<Elem>{};
  if (!chain_sorted(L, U) || !chain_sorted(L, V)) return false;
  // Orientation rule as in the greedy path: greater id sequence first.
  std::vector<std::string> su, sv;
  for (Elem e : U) su.push_back(L.id(e));
  for (Elem e : V) sv.push_back(L.id(e));
  if (sv > su) std::swap(U, V);
  return true;
}

}  // namespace

JoinCoordinates join_coordinates(const FiniteLattice& L) {
  if (!is_slim(L)) fail(Err::NotSlim, "join coordinates require a slim lattice");
  auto jir = join_irreducibles(L);

  JoinCoordinates jc;
  if (!jir.empty()) {
    std::vector<Elem> U = greatest_max_chain(L, jir);
    std::vector<uint8_t> in_u(static_cast<size_t>(L.size()), 0);
    for (Elem e : U) in_u[static_cast<size_t>(e)] = 1;
    std::vector<Elem> V;
    for (Elem e : jir)
      if (!in_u[static_cast<size_t>(e)]) V.push_back(e);
    if (chain_sorted(L, V)) {
      jc.U = std::move(U);
      jc.V = std::move(V);
    } else if (!two_chain_partition(L, jir, jc.U, jc.V)) {
      fail(Err::NotSlim, "join-irreducibles admit no two-chain partition");
    }
  }

  jc.i.assign(static_cast<size_t>(L.size()), 0);
  jc.j.assign(static_cast<size_t>(L.size()), 0);
  for (int x = 0; x < L.size(); ++x) {
    for (size_t s = 0; s < jc.U.size(); ++s)
      if (L.leq(jc.U[s], x)) jc.i[static_cast<size_t>(x)] = static_cast<int>(s) + 1;
    for (size_t t = 0; t < jc.V.size(); ++t)
      if (L.leq(jc.V[t], x)) jc.j[static_cast<size_t>(x)] = static_cast<int>(t) + 1;
  }
  check_join_coordinates(L, jc);
  return jc;
}

void check_join_coordinates(const FiniteLattice& L, const JoinCoordinates& jc) {
  auto prefix_join = [&](int i, int j) {
    Elem acc = L.bottom();
    if (i > 0) acc = L.join(acc, jc.U[static_cast<size_t>(i - 1)]);
    if (j > 0) acc = L.join(acc, jc.V[static_cast<size_t>(j - 1)]);
    return acc;
  };
  for (int x = 0; x < L.size(); ++x) {
    if (prefix_join(jc.i[static_cast<size_t>(x)], jc.j[static_cast<size_t>(x)]) != x)
      fail(Err::Internal, "join coordinates do not recover '" + L.id(x) + "'");
    for (int y = 0; y < L.size(); ++y) {
      bool coord_leq = jc.i[static_cast<size_t>(x)] <= jc.i[static_cast<size_t>(y)] &&
                       jc.j[static_cast<size_t>(x)] <= jc.j[static_cast<size_t>(y)];
      if (coord_leq != L.leq(x, y))
        fail(Err::Internal, "coordinate order mismatch at ('" + L.id(x) + "','" + L.id(y) + "')");
      Elem m = L.meet(x, y);
      if (jc.i[static_cast<size_t>(m)] !=
              std::min(jc.i[static_cast<size_t>(x)], jc.i[static_cast<size_t>(y)]) ||
          jc.j[static_cast<size_t>(m)] !=
              std::min(jc.j[static_cast<size_t>(x)], jc.j[static_cast<size_t>(y)]))
        fail(Err::Internal, "min rule fails at ('" + L.id(x) + "','" + L.id(y) + "')");
    }
  }
}

}  // namespace slimlat
