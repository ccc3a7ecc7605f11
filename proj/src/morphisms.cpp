#include "slimlat/morphisms.hpp"

#include <algorithm>

namespace slimlat {

bool is_homomorphism(const LatticeMap& m) {
  const FiniteLattice& K = *m.source;
  const FiniteLattice& L = *m.target;
  for (int x = 0; x < K.size(); ++x)
    for (int y = x; y < K.size(); ++y) {
      if (m(K.meet(x, y)) != L.meet(m(x), m(y))) return false;
      if (m(K.join(x, y)) != L.join(m(x), m(y))) return false;
    }
  return true;
}

bool is_embedding(const LatticeMap& m) {
  std::vector<uint8_t> hit(static_cast<size_t>(m.target->size()), 0);
  for (Elem v : m.assignment) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return is_homomorphism(m);
}

namespace {

// Linear extension of K ordered by (height, identifier) — stable across
// relabelings of the backing indices.
std::vector<Elem> assignment_order(const FiniteLattice& K) {
  std::vector<int> h(static_cast<size_t>(K.size()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : K.cover_pairs())
      if (h[static_cast<size_t>(lo)] + 1 > h[static_cast<size_t>(hi)]) {
        h[static_cast<size_t>(hi)] = h[static_cast<size_t>(lo)] + 1;
        changed = true;
      }
  }
  std::vector<Elem> order(static_cast<size_t>(K.size()));
  for (int i = 0; i < K.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return std::make_pair(h[static_cast<size_t>(a)], K.id(a)) <
           std::make_pair(h[static_cast<size_t>(b)], K.id(b));
  });
  return order;
}

struct EmbedSearch {
  const FiniteLattice& K;
  const FiniteLattice& L;
  const std::vector<uint8_t>* inS = nullptr;     // constraint targets
  const std::vector<uint8_t>* inA = nullptr;     // constrained sources
  const std::function<bool(const LatticeMap&)>& sink;
  std::vector<Elem> order;
  std::vector<Elem> g;        // -1 = unassigned
  std::vector<uint8_t> used;
  bool stopped = false;

  EmbedSearch(const FiniteLattice& k, const FiniteLattice& l,
              const std::function<bool(const LatticeMap&)>& s)
      : K(k), L(l), sink(s) {}

  bool consistent(Elem x, Elem v) const {
    if (inA && (*inA)[static_cast<size_t>(x)] && !(*inS)[static_cast<size_t>(v)]) return false;
    for (Elem y : order) {
      Elem w = g[static_cast<size_t>(y)];
      if (w < 0 || y == x) continue;
      // order embedding both ways
      if (K.leq(x, y) != L.leq(v, w)) return false;
      if (K.leq(y, x) != L.leq(w, v)) return false;
      // meet/join preservation whenever the K-side value is already fixed
      Elem km = K.meet(x, y), kj = K.join(x, y);
      if (g[static_cast<size_t>(km)] >= 0 && g[static_cast<size_t>(km)] != L.meet(v, w)) return false;
      if (g[static_cast<size_t>(kj)] >= 0 && g[static_cast<size_t>(kj)] != L.join(v, w)) return false;
    }
    return true;
  }

  void rec(size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      LatticeMap m{&K, &L, g};
      if (is_embedding(m)) {
        if (!sink(m)) stopped = true;
      }
      return;
    }
    Elem x = order[depth];
    // candidate targets in identifier order for reproducibility
    std::vector<Elem> cands(static_cast<size_t>(L.size()));
    for (int v = 0; v < L.size(); ++v) cands[static_cast<size_t>(v)] = v;
    std::sort(cands.begin(), cands.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });
    for (Elem v : cands) {
      if (used[static_cast<size_t>(v)] || !consistent(x, v)) continue;
      used[static_cast<size_t>(v)] = 1;
      g[static_cast<size_t>(x)] = v;
      rec(depth + 1);
      g[static_cast<size_t>(x)] = -1;
      used[static_cast<size_t>(v)] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_embeddings(const FiniteLattice& K, const FiniteLattice& L,
                          const std::vector<Elem>* constraintA, const std::vector<Elem>* constraintS,
                          const std::function<bool(const LatticeMap&)>& sink) {
  EmbedSearch s(K, L, sink);
  std::vector<uint8_t> inS, inA;
  if (constraintA && constraintS) {
    inS.assign(static_cast<size_t>(L.size()), 0);
    inA.assign(static_cast<size_t>(K.size()), 0);
    for (Elem v : *constraintS) inS[static_cast<size_t>(v)] = 1;
    for (Elem x : *constraintA) inA[static_cast<size_t>(x)] = 1;
    s.inS = &inS;
    s.inA = &inA;
  }
  s.order = assignment_order(K);
  s.g.assign(static_cast<size_t>(K.size()), -1);
  s.used.assign(static_cast<size_t>(L.size()), 0);
  s.rec(0);
}

std::vector<LatticeMap> all_embeddings(const FiniteLattice& K, const FiniteLattice& L) {
  std::vector<LatticeMap> out;
  enumerate_embeddings(K, L, nullptr, nullptr, [&](const LatticeMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

bool validate_retraction(const FiniteLattice& L, const std::vector<Elem>& f) {
  for (int x = 0; x < L.size(); ++x)
    if (f[static_cast<size_t>(f[static_cast<size_t>(x)])] != f[static_cast<size_t>(x)]) return false;
  LatticeMap m{&L, &L, f};
  if (!is_homomorphism(m)) return false;
  std::vector<Elem> image;
  for (int x = 0; x < L.size(); ++x)
    if (f[static_cast<size_t>(x)] == x) image.push_back(x);
  for (int x = 0; x < L.size(); ++x) {
    bool fixed = f[static_cast<size_t>(x)] == x;
    bool in_image = std::find(image.begin(), image.end(), f[static_cast<size_t>(x)]) != image.end();
    if (!in_image) return false;
    (void)fixed;
  }
  return true;
}

struct RetractionSearch {
  const FiniteLattice& L;
  std::vector<Elem> order;      // bottom-up by (height, id)
  std::vector<size_t> pos;      // position of element in order
  std::vector<Elem> f;          // -1 unassigned
  std::vector<Retraction>& out;

  RetractionSearch(const FiniteLattice& lat, std::vector<Retraction>& o) : L(lat), out(o) {}

  bool consistent(Elem x, Elem v) {
    // idempotence: if f(v) is known it must be v; if v already assigned a
    // different image, x cannot map there
    if (f[static_cast<size_t>(v)] >= 0 && f[static_cast<size_t>(v)] != v) return false;
    if (v == x) {
      // fine: x becomes a fixed point
    }
    for (Elem y : order) {
      Elem w = f[static_cast<size_t>(y)];
      if (w < 0 || y == x) continue;
      if (L.leq(y, x) && !L.leq(w, v)) return false;
      if (L.leq(x, y) && !L.leq(v, w)) return false;
      Elem km = L.meet(x, y), kj = L.join(x, y);
      if (f[static_cast<size_t>(km)] >= 0 && f[static_cast<size_t>(km)] != L.meet(v, w)) return false;
      if (f[static_cast<size_t>(kj)] >= 0 && f[static_cast<size_t>(kj)] != L.join(v, w)) return false;
    }
    return true;
  }

  void rec(size_t depth) {
    if (depth == order.size()) {
      if (!validate_retraction(L, f)) return;
      Retraction r;
      r.map = LatticeMap{&L, &L, f};
      for (int x = 0; x < L.size(); ++x)
        if (f[static_cast<size_t>(x)] == x) r.image.push_back(x);
      out.push_back(std::move(r));
      return;
    }
    Elem x = order[depth];
    if (f[static_cast<size_t>(x)] >= 0) {  // forced earlier (idempotence)
      rec(depth + 1);
      return;
    }
    std::vector<Elem> cands(static_cast<size_t>(L.size()));
    for (int v = 0; v < L.size(); ++v) cands[static_cast<size_t>(v)] = v;
    std::sort(cands.begin(), cands.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });
    for (Elem v : cands) {
      if (!consistent(x, v)) continue;
      bool forced = false;
      if (v != x && f[static_cast<size_t>(v)] < 0) {
        // the image element must become a fixed point
        if (!consistent(v, v)) continue;
        f[static_cast<size_t>(v)] = v;
        forced = true;
      }
      f[static_cast<size_t>(x)] = v;
      rec(depth + 1);
      f[static_cast<size_t>(x)] = -1;
      if (forced) f[static_cast<size_t>(v)] = -1;
    }
  }
};

}  // namespace

std::vector<Retraction> enumerate_retractions(const FiniteLattice& L, int size_bound) {
  if (L.size() > size_bound)
    fail(Err::SizeBound, "retraction enumeration is bounded to " + std::to_string(size_bound) +
                             " elements, lattice has " + std::to_string(L.size()));
  std::vector<Retraction> out;
  RetractionSearch s(L, out);
  s.order = assignment_order(L);
  s.pos.assign(static_cast<size_t>(L.size()), 0);
  for (size_t k = 0; k < s.order.size(); ++k) s.pos[static_cast<size_t>(s.order[k])] = k;
  s.f.assign(static_cast<size_t>(L.size()), -1);
  s.rec(0);
  return out;
}

std::vector<std::vector<Elem>> retracts(const FiniteLattice& L, int size_bound) {
  std::vector<std::vector<Elem>> images;
  for (const Retraction& r : enumerate_retractions(L, size_bound)) {
    if (!is_sublattice(L, r.image)) fail(Err::Internal, "retract image is not a sublattice");
    images.push_back(r.image);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::optional<Retraction> is_retract(const FiniteLattice& L, const std::vector<Elem>& S) {
  if (!is_sublattice(L, S)) fail(Err::NotSublattice, "candidate image is not a sublattice");
  std::vector<uint8_t> inS(static_cast<size_t>(L.size()), 0);
  for (Elem x : S) inS[static_cast<size_t>(x)] = 1;

  std::vector<Elem> outside;
  for (int x = 0; x < L.size(); ++x)
    if (!inS[static_cast<size_t>(x)]) outside.push_back(x);
  std::sort(outside.begin(), outside.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });

  std::vector<Elem> f(static_cast<size_t>(L.size()), -1);
  for (Elem x : S) f[static_cast<size_t>(x)] = x;

  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == outside.size()) {
      LatticeMap m{&L, &L, f};
      return is_homomorphism(m);
    }
    Elem x = outside[depth];
    for (Elem v : S) {
      bool ok = true;
      for (int y = 0; y < L.size() && ok; ++y) {
        Elem w = f[static_cast<size_t>(y)];
        if (w < 0 || y == x) continue;
        if (L.leq(y, x) && !L.leq(w, v)) ok = false;
        if (ok && L.leq(x, y) && !L.leq(v, w)) ok = false;
        if (ok) {
          Elem km = L.meet(x, y), kj = L.join(x, y);
          if (f[static_cast<size_t>(km)] >= 0 && f[static_cast<size_t>(km)] != L.meet(v, w)) ok = false;
          if (ok && f[static_cast<size_t>(kj)] >= 0 && f[static_cast<size_t>(kj)] != L.join(v, w))
            ok = false;
        }
      }
      if (!ok) continue;
      f[static_cast<size_t>(x)] = v;
      if (rec(depth + 1)) return true;
      f[static_cast<size_t>(x)] = -1;
    }
    return false;
  };

  if (!rec(0)) return std::nullopt;
  Retraction r;
  r.map = LatticeMap{&L, &L, f};
  r.image = S;
  std::sort(r.image.begin(), r.image.end());
  if (!validate_retraction(L, f)) fail(Err::Internal, "retraction witness failed validation");
  return r;
}

Retraction cogwheel_retraction(const FiniteLattice& L, const std::vector<CogwheelBlock>& blocks) {
  std::vector<Elem> f(static_cast<size_t>(L.size()), -1);
  for (const CogwheelBlock& b : blocks) {
    bool marked_inside = false;
    for (Elem x : b.members) {
      if (f[static_cast<size_t>(x)] >= 0)
        fail(Err::NotARetraction, "blocks overlap at '" + L.id(x) + "'");
      f[static_cast<size_t>(x)] = b.marked;
      if (x == b.marked) marked_inside = true;
    }
    if (!marked_inside) fail(Err::NotARetraction, "marked element outside its block");
  }
  for (int x = 0; x < L.size(); ++x)
    if (f[static_cast<size_t>(x)] < 0) fail(Err::NotARetraction, "blocks do not cover '" + L.id(x) + "'");
  if (!validate_retraction(L, f))
    fail(Err::NotARetraction, "block map is not an idempotent lattice endomorphism");
  Retraction r;
  r.map = LatticeMap{&L, &L, std::move(f)};
  for (int x = 0; x < L.size(); ++x)
    if (r.map.assignment[static_cast<size_t>(x)] == x) r.image.push_back(x);
  return r;
}

}  // namespace slimlat
