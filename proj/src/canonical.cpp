#include "slimlat/canonical.hpp"

#include <algorithm>
#include <map>

namespace slimlat {

namespace {

std::vector<int> refine_colors(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> height(static_cast<size_t>(n), 0), depth(static_cast<size_t>(n), 0);
  // longest chains from below / above; elements indexed in any order, so
  // iterate to a fixpoint (n is tiny).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (Elem y : L.lower_covers(x))
        if (height[static_cast<size_t>(y)] + 1 > height[static_cast<size_t>(x)]) {
          height[static_cast<size_t>(x)] = height[static_cast<size_t>(y)] + 1;
          changed = true;
        }
      for (Elem y : L.upper_covers(x))
        if (depth[static_cast<size_t>(y)] + 1 > depth[static_cast<size_t>(x)]) {
          depth[static_cast<size_t>(x)] = depth[static_cast<size_t>(y)] + 1;
          changed = true;
        }
    }
  }

  std::vector<int> color(static_cast<size_t>(n));
  {
    std::map<std::tuple<int, int, size_t, size_t>, int> ids;
    std::vector<std::tuple<int, int, size_t, size_t>> sig(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
      sig[static_cast<size_t>(x)] = {height[static_cast<size_t>(x)], depth[static_cast<size_t>(x)],
                                     L.lower_covers(x).size(), L.upper_covers(x).size()};
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (int x = 0; x < n; ++x) color[static_cast<size_t>(x)] = ids[sig[static_cast<size_t>(x)]];
  }

  for (;;) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      std::vector<int> lo, hi;
      for (Elem y : L.lower_covers(x)) lo.push_back(color[static_cast<size_t>(y)]);
      for (Elem y : L.upper_covers(x)) hi.push_back(color[static_cast<size_t>(y)]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      sig[static_cast<size_t>(x)] = {color[static_cast<size_t>(x)], std::move(lo), std::move(hi)};
    }
    std::map<Sig, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    std::vector<int> fresh(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) fresh[static_cast<size_t>(x)] = ids[sig[static_cast<size_t>(x)]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

struct Search {
  const FiniteLattice& L;
  int n;
  std::vector<std::vector<Elem>> classes;  // ordered by color id
  std::vector<Elem> perm;                  // perm[new index] = old element
  std::vector<uint8_t> used;
  std::vector<uint8_t> best;  // row-major cover matrix, smallest so far
  std::vector<uint8_t> cur;
  bool have_best = false;

  explicit Search(const FiniteLattice& lat) : L(lat), n(lat.size()) {}

  // Rows only depend on already-placed elements because covers of element
  // placed at position p can point anywhere; we fill the full matrix at the
  // leaves instead of prefix-pruning — class products stay tiny here.
  void leaf() {
    cur.assign(static_cast<size_t>(n) * n, 0);
    std::vector<int> where(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) where[static_cast<size_t>(perm[static_cast<size_t>(p)])] = p;
    for (const auto& [a, b] : L.cover_pairs())
      cur[static_cast<size_t>(where[static_cast<size_t>(a)]) * n + where[static_cast<size_t>(b)]] = 1;
    if (!have_best || cur < best) {
      best = cur;
      have_best = true;
    }
  }

  void rec(size_t ci, size_t within) {
    if (ci == classes.size()) {
      leaf();
      return;
    }
    auto& cls = classes[ci];
    if (within == cls.size()) {
      rec(ci + 1, 0);
      return;
    }
    for (size_t k = 0; k < cls.size(); ++k) {
      Elem e = cls[k];
      if (used[static_cast<size_t>(e)]) continue;
      used[static_cast<size_t>(e)] = 1;
      perm.push_back(e);
      rec(ci, within + 1);
      perm.pop_back();
      used[static_cast<size_t>(e)] = 0;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> color = refine_colors(L);
  int nc = 0;
  for (int c : color) nc = std::max(nc, c + 1);

  Search s(L);
  s.classes.assign(static_cast<size_t>(nc), {});
  for (int x = 0; x < n; ++x) s.classes[static_cast<size_t>(color[static_cast<size_t>(x)])].push_back(x);

  long long product = 1;
  for (const auto& cls : s.classes) {
    for (size_t k = 2; k <= cls.size(); ++k) {
      product *= static_cast<long long>(k);
      if (product > 2'000'000) fail(Err::Internal, "canonical_form: automorphism class blow-up");
    }
  }

  s.used.assign(static_cast<size_t>(n), 0);
  s.rec(0, 0);

  // Pack the winning matrix into hex, prefixed with the size.
  std::string digest = "n" + std::to_string(n) + "-";
  static const char* hexd = "0123456789abcdef";
  int acc = 0, bits = 0;
  for (size_t i = 0; i < s.best.size(); ++i) {
    acc = (acc << 1) | s.best[i];
    if (++bits == 4) {
      digest.push_back(hexd[acc]);
      acc = 0;
      bits = 0;
    }
  }
  if (bits > 0) digest.push_back(hexd[acc << (4 - bits)]);
  return CanonicalForm{digest};
}

}  // namespace slimlat
