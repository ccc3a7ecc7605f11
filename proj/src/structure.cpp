#include "slimlat/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace slimlat {

namespace {

std::string rs_id(int r, int s) { return std::to_string(r) + "," + std::to_string(s); }

FiniteLattice lattice_from_coords(const std::vector<std::string>& ids,
                                  const std::vector<std::pair<int, int>>& rs) {
  const size_t n = ids.size();
  auto dominated = [&](size_t x, size_t y) {
    return rs[x].first <= rs[y].first && rs[x].second <= rs[y].second;
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (x == y || !dominated(x, y)) continue;
      bool cover = true;
      for (size_t z = 0; z < n && cover; ++z)
        if (z != x && z != y && dominated(x, z) && dominated(z, y)) cover = false;
      if (cover) covers.emplace_back(ids[x], ids[y]);
    }
  return FiniteLattice::build(ids, covers);
}

int lattice_length(const FiniteLattice& L) {
  std::vector<int> h(static_cast<size_t>(L.size()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : L.cover_pairs())
      if (h[static_cast<size_t>(lo)] + 1 > h[static_cast<size_t>(hi)]) {
        h[static_cast<size_t>(hi)] = h[static_cast<size_t>(lo)] + 1;
        changed = true;
      }
  }
  return h[static_cast<size_t>(L.top())];
}

}  // namespace

SslDiagram grid(int m, int k) {
  if (m < 2 || k < 2) fail(Err::SingletonChain, "grid factors must be nonsingleton chains");
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> rs;
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < k; ++s) {
      ids.push_back(rs_id(r, s));
      rs.emplace_back(r, s);
    }
  FiniteLattice L = lattice_from_coords(ids, rs);
  return SslDiagram{L, compute_layout(L)};
}

std::vector<FourCell> four_cells(const FiniteLattice& L, const DiagramLayout& lay) {
  Report rep = validate_c1(L, lay);
  if (!rep.ok())
    fail(Err::LayoutInvalid, rep.violations.front().check + ": " + rep.violations.front().detail);

  std::vector<FourCell> cells;
  for (int o = 0; o < L.size(); ++o) {
    const auto& ups = L.upper_covers(o);
    for (size_t i = 0; i < ups.size(); ++i)
      for (size_t j = i + 1; j < ups.size(); ++j) {
        Elem p = ups[i], q = ups[j];
        Elem t = L.join(p, q);
        if (L.meet(p, q) != o) continue;
        if (!L.covers(p, t) || !L.covers(q, t)) continue;
        Elem a = p, b = q;
        if (lay.at(a).x > lay.at(b).x) std::swap(a, b);
        // quadrilateral o -> b -> t -> a, counterclockwise; interior must be empty
        bool empty = true;
        for (int e = 0; e < L.size() && empty; ++e) {
          if (e == o || e == a || e == b || e == t) continue;
          const Point& pt = lay.at(e);
          if (cross(lay.at(o), lay.at(b), pt) > Rat(0) && cross(lay.at(b), lay.at(t), pt) > Rat(0) &&
              cross(lay.at(t), lay.at(a), pt) > Rat(0) && cross(lay.at(a), lay.at(o), pt) > Rat(0))
            empty = false;
        }
        if (empty) cells.push_back(FourCell{o, a, b, t});
      }
  }
  std::sort(cells.begin(), cells.end(), [&](const FourCell& x, const FourCell& y) {
    return std::make_pair(L.id(x.t), L.id(x.a)) < std::make_pair(L.id(y.t), L.id(y.a));
  });
  return cells;
}

namespace {

bool same_cell(const FourCell& x, const FourCell& y) {
  return x.o == y.o && x.a == y.a && x.b == y.b && x.t == y.t;
}

void require_cell(const FiniteLattice& L, const DiagramLayout& lay, const FourCell& cell) {
  for (const FourCell& c : four_cells(L, lay))
    if (same_cell(c, cell)) return;
  fail(Err::NotACell, "not a 4-cell of this diagram");
}

}  // namespace

bool is_distributive_cell(const FiniteLattice& L, const DiagramLayout& lay, const FourCell& cell) {
  require_cell(L, lay, cell);
  std::vector<Elem> ideal;
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(x, cell.t)) ideal.push_back(x);
  for (Elem x : ideal)
    for (Elem y : ideal)
      for (Elem z : ideal)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

SslDiagram multifork_extend(const FiniteLattice& L, const DiagramLayout& lay, const FourCell& cell,
                            int n, const std::string& id_prefix) {
  if (n < 1) fail(Err::BadMultiplicity, "multifork multiplicity must be positive");
  if (!is_slim(L)) fail(Err::NotSlim, "multifork extension requires a slim lattice");
  if (!is_semimodular(L)) fail(Err::NotSemimodular, "multifork extension requires semimodularity");
  if (!is_distributive_cell(L, lay, cell))
    fail(Err::NotDistributiveCell, "cell ideal is not distributive");

  JoinCoordinates jc = join_coordinates(L);
  const int it = jc.i[static_cast<size_t>(cell.t)];
  const int jt = jc.j[static_cast<size_t>(cell.t)];
  {
    int below = 0;
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(x, cell.t)) ++below;
    if (it < 1 || jt < 1 || below != (it + 1) * (jt + 1))
      fail(Err::NotDistributiveCell, "cell ideal is not a grid");
  }

  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> rs;
  for (int x = 0; x < L.size(); ++x) {
    int r = jc.i[static_cast<size_t>(x)], s = jc.j[static_cast<size_t>(x)];
    ids.push_back(L.id(x));
    rs.emplace_back(r >= it ? r + n : r, s >= jt ? s + n : s);
  }
  std::vector<std::string> h_ids;
  for (int c = 1; c <= n; ++c)
    for (int s = 0; s < jt; ++s) {
      ids.push_back(id_prefix + "l" + std::to_string(c) + "." + std::to_string(s));
      rs.emplace_back(it + c - 1, s);
    }
  for (int c = 1; c <= n; ++c)
    for (int r = 0; r < it; ++r) {
      ids.push_back(id_prefix + "r" + std::to_string(c) + "." + std::to_string(r));
      rs.emplace_back(r, jt + c - 1);
    }
  for (int al = 0; al < n; ++al)
    for (int be = 0; al + be <= n - 1; ++be) {
      if (al + be == n - 1) {
        ids.push_back(id_prefix + "h" + std::to_string(n - al));
        h_ids.push_back(ids.back());
      } else {
        ids.push_back(id_prefix + "c" + std::to_string(al) + "." + std::to_string(be));
      }
      rs.emplace_back(it + al, jt + be);
    }

  FiniteLattice R = lattice_from_coords(ids, rs);
  DiagramLayout rlay = compute_layout(R);

  // Postcondition gates; any failure is a construction bug.
  if (!is_slim(R) || !is_semimodular(R))
    fail(Err::Internal, "multifork output is not slim semimodular");
  for (int x = 0; x < L.size(); ++x) {
    Elem rx = R.index(L.id(x));
    for (int y = 0; y < L.size(); ++y) {
      Elem ry = R.index(L.id(y));
      if (L.leq(x, y) != R.leq(rx, ry)) fail(Err::Internal, "multifork changed the old order");
      if (R.id(R.meet(rx, ry)) != L.id(L.meet(x, y)))
        fail(Err::Internal, "multifork changed an old meet");
    }
  }
  {
    std::set<std::string> new_mir;
    std::set<std::string> old_ids(ids.begin(), ids.begin() + L.size());
    for (Elem x : meet_irreducibles(R))
      if (!old_ids.count(R.id(x))) new_mir.insert(R.id(x));
    if (new_mir != std::set<std::string>(h_ids.begin(), h_ids.end()))
      fail(Err::Internal, "new meet-irreducibles are not exactly the fork tops");
  }
  JoinCoordinates jc2 = join_coordinates(R);
  Elem rt = R.index(L.id(cell.t));
  for (const std::string& hid : h_ids) {
    Elem h = R.index(hid);
    const auto& ups = R.upper_covers(h);
    if (ups.size() != 1 || ups[0] != rt) fail(Err::Internal, "fork top not covered by the cell top");
    if (classify_edge(rlay, h, ups[0]) != Slope::Precipitous)
      fail(Err::Internal, "fork top edge is not precipitous");
    if (on_boundary(R, rlay, h)) fail(Err::Internal, "fork top lies on a boundary chain");
    int cnt = 0;
    for (int x = 0; x < R.size(); ++x)
      if (R.leq(x, h)) ++cnt;
    if (cnt != (jc2.i[static_cast<size_t>(h)] + 1) * (jc2.j[static_cast<size_t>(h)] + 1))
      fail(Err::Internal, "fork top ideal is not a grid");
  }
  if (lattice_length(R) != lattice_length(L) + n)
    fail(Err::Internal, "multifork changed the length by the wrong amount");

  return SslDiagram{std::move(R), std::move(rlay)};
}

std::vector<Elem> corners(const FiniteLattice& L, const DiagramLayout& lay) {
  Report rep = validate_c1(L, lay);
  if (!rep.ok())
    fail(Err::LayoutInvalid, rep.violations.front().check + ": " + rep.violations.front().detail);
  std::vector<Elem> out;
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.bottom() || x == L.top()) continue;
    if (L.lower_covers(x).size() != 1 || L.upper_covers(x).size() != 1) continue;
    if (!on_boundary(L, lay, x)) continue;
    if (L.lower_covers(L.upper_covers(x)[0]).size() == 2) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });
  return out;
}

SslDiagram remove_corner(const FiniteLattice& L, const DiagramLayout& lay, Elem w) {
  auto cs = corners(L, lay);
  if (std::find(cs.begin(), cs.end(), w) == cs.end())
    fail(Err::NotACorner, "'" + L.id(w) + "' is not a corner");

  std::vector<Elem> keep;
  for (int x = 0; x < L.size(); ++x)
    if (x != w) keep.push_back(x);
  FiniteLattice R = induced_lattice(L, keep);
  DiagramLayout rlay;
  rlay.pos.reserve(keep.size());
  for (Elem x : keep) rlay.pos.push_back(lay.at(x));

  if (R.size() != L.size() - 1) fail(Err::Internal, "corner removal changed the size wrongly");
  if (!is_slim(R) || !is_semimodular(R))
    fail(Err::Internal, "corner removal output is not slim semimodular");
  for (size_t x = 0; x < keep.size(); ++x)
    for (size_t y = 0; y < keep.size(); ++y)
      if (R.id(R.meet(static_cast<Elem>(x), static_cast<Elem>(y))) !=
          L.id(L.meet(keep[x], keep[y])))
        fail(Err::Internal, "corner removal changed a meet of surviving elements");
  if (lattice_length(R) != lattice_length(L))
    fail(Err::Internal, "corner removal changed the lattice length");
  Report rep = validate_c1(R, rlay);
  if (!rep.ok())
    fail(Err::LayoutInvalid, "corner removal broke the diagram: " +
                                 rep.violations.front().check + ": " +
                                 rep.violations.front().detail);
  return SslDiagram{std::move(R), std::move(rlay)};
}

namespace {

SslDiagram special_chain(int sz) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < sz; ++i) ids.push_back(std::to_string(i));
  for (int i = 0; i + 1 < sz; ++i) covers.emplace_back(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(i + 1)]);
  FiniteLattice L = FiniteLattice::build(ids, covers);
  return SslDiagram{L, compute_layout(L)};
}

}  // namespace

SslDiagram replay(const ConstructionRecipe& recipe) {
  if (recipe.grid_m < 2 || recipe.grid_k < 2) {
    bool special1 = recipe.grid_m == 1 && recipe.grid_k == 1;
    bool special2 = recipe.grid_m == 1 && recipe.grid_k == 2;
    if ((!special1 && !special2) || !recipe.steps.empty())
      fail(Err::MalformedRecipe, "grid factors below 2 are reserved for the bare chain cases");
    return special_chain(special1 ? 1 : 2);
  }

  SslDiagram cur = grid(recipe.grid_m, recipe.grid_k);
  bool removing = false;
  int forks = 0;
  for (size_t k = 0; k < recipe.steps.size(); ++k) {
    const RecipeStep& st = recipe.steps[k];
    std::string at = "step " + std::to_string(k + 1) + ": ";
    try {
      if (st.fork && st.removal) fail(Err::MalformedRecipe, "step has two operations");
      if (st.fork) {
        if (removing) fail(Err::MalformedRecipe, "multifork after a corner removal");
        const MultiforkStep& mf = *st.fork;
        auto cells = four_cells(cur.lattice, cur.layout);
        const FourCell* found = nullptr;
        for (const FourCell& c : cells) {
          if (cur.lattice.id(c.t) != mf.cell_top) continue;
          if (cur.lattice.id(c.a) == mf.cell_left || cur.lattice.id(c.b) == mf.cell_left) {
            found = &c;
            break;
          }
        }
        if (!found) fail(Err::NotACell, "no 4-cell with left '" + mf.cell_left + "' and top '" +
                                            mf.cell_top + "'");
        ++forks;
        cur = multifork_extend(cur.lattice, cur.layout, *found, mf.n,
                               "f" + std::to_string(forks) + ":");
      } else if (st.removal) {
        removing = true;
        cur = remove_corner(cur.lattice, cur.layout, cur.lattice.index(*st.removal));
      } else {
        fail(Err::MalformedRecipe, "empty step");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("step ", 0) == 0) throw;
      fail(e.code(), at + e.what());
    }
  }
  return cur;
}

namespace {

struct GenState {
  SslDiagram d;
  ConstructionRecipe recipe;
  int length = 0;
  int added = 0;
  int removals = 0;
  CanonicalForm canon;
};

struct GenKey {
  int area, added, removals;
  long long seq;
  bool operator>(const GenKey& o) const {
    return std::tie(area, added, removals, seq) > std::tie(o.area, o.added, o.removals, o.seq);
  }
};

}  // namespace

std::vector<Generated> generate_ssl(int max_size) {
  if (max_size < 1) fail(Err::SizeBound, "max_size must be positive");
  std::vector<Generated> out;
  std::set<std::string> emitted;

  auto emit = [&](const SslDiagram& d, const ConstructionRecipe& r, const CanonicalForm& c) {
    if (d.lattice.size() > max_size) return;
    if (!emitted.insert(c.digest).second) return;
    out.push_back(Generated{d.lattice, d.layout, r, c});
  };

  // The structure theorem box starts at grids; the one- and two-element
  // lattices are reached by no recipe, so they are emitted directly.
  if (max_size >= 1) {
    SslDiagram d = special_chain(1);
    emit(d, ConstructionRecipe{1, 1, {}}, canonical_form(d.lattice));
  }
  if (max_size >= 2) {
    SslDiagram d = special_chain(2);
    emit(d, ConstructionRecipe{1, 2, {}}, canonical_form(d.lattice));
  }

  std::priority_queue<std::pair<GenKey, size_t>, std::vector<std::pair<GenKey, size_t>>,
                      std::greater<>> pq;
  std::deque<GenState> pool;
  std::set<std::string> visited_tower, visited_trim;
  long long seq = 0;

  auto push = [&](GenState&& st, int area) {
    auto& visited = st.removals == 0 ? visited_tower : visited_trim;
    if (st.removals > 0 && visited_tower.count(st.canon.digest)) return;
    if (!visited.insert(st.canon.digest).second) return;
    GenKey key{area, st.added, st.removals, seq++};
    pool.push_back(std::move(st));
    pq.emplace(key, pool.size() - 1);
  };

  for (int m = 2; m <= max_size + 1; ++m)
    for (int k = m; m + k - 2 <= max_size - 1; ++k) {
      GenState st;
      st.d = grid(m, k);
      st.recipe = ConstructionRecipe{m, k, {}};
      st.length = m + k - 2;
      st.canon = canonical_form(st.d.lattice);
      push(std::move(st), m * k);
    }

  while (!pq.empty()) {
    auto [key, idx] = pq.top();
    pq.pop();
    GenState st = std::move(pool[idx]);
    emit(st.d, st.recipe, st.canon);

    if (st.removals == 0) {
      auto cells = four_cells(st.d.lattice, st.d.layout);
      int forks = 0;
      for (const auto& s : st.recipe.steps)
        if (s.fork) ++forks;
      for (const FourCell& cell : cells) {
        if (!is_distributive_cell(st.d.lattice, st.d.layout, cell)) continue;
        for (int n = 1; st.length + n <= max_size - 1; ++n) {
          GenState child;
          child.d = multifork_extend(st.d.lattice, st.d.layout, cell, n,
                                     "f" + std::to_string(forks + 1) + ":");
          child.recipe = st.recipe;
          RecipeStep step;
          step.fork = MultiforkStep{st.d.lattice.id(cell.a), st.d.lattice.id(cell.t), n};
          child.recipe.steps.push_back(step);
          child.length = st.length + n;
          child.added = st.added + (child.d.lattice.size() - st.d.lattice.size());
          child.canon = canonical_form(child.d.lattice);
          push(std::move(child), key.area);
        }
      }
    }
    for (Elem w : corners(st.d.lattice, st.d.layout)) {
      GenState child;
      child.d = remove_corner(st.d.lattice, st.d.layout, w);
      child.recipe = st.recipe;
      RecipeStep step;
      step.removal = st.d.lattice.id(w);
      child.recipe.steps.push_back(step);
      child.length = st.length;
      child.added = st.added;
      child.removals = st.removals + 1;
      child.canon = canonical_form(child.d.lattice);
      push(std::move(child), key.area);
    }
  }
  return out;
}

namespace {

// Meet-semilattice with bottom, elements 0..n-1 added in linear-extension
// order; down[x] is the bitmask of elements below-or-equal x.
struct SemiState {
  int n = 0;
  std::vector<uint32_t> down;
};

std::vector<std::pair<std::string, std::string>> semi_covers(const SemiState& s) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (int y = 0; y < s.n; ++y)
    for (int x = 0; x < s.n; ++x) {
      if (x == y || (s.down[static_cast<size_t>(y)] & (1u << x)) == 0) continue;
      bool cover = true;
      for (int z = 0; z < s.n && cover; ++z) {
        if (z == x || z == y) continue;
        if ((s.down[static_cast<size_t>(y)] & (1u << z)) && (s.down[static_cast<size_t>(z)] & (1u << x)))
          cover = false;
      }
      if (cover) covers.emplace_back("e" + std::to_string(x), "e" + std::to_string(y));
    }
  return covers;
}

std::vector<int> semi_maximal(const SemiState& s) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x) {
    bool maximal = true;
    for (int y = 0; y < s.n && maximal; ++y)
      if (y != x && (s.down[static_cast<size_t>(y)] & (1u << x))) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

std::string semi_canon_key(const SemiState& s) {
  // Canonicalize via the bijection with lattices: add a synthetic top.
  std::vector<std::string> ids;
  for (int x = 0; x < s.n; ++x) ids.push_back("e" + std::to_string(x));
  ids.push_back("#top");
  auto covers = semi_covers(s);
  for (int mx : semi_maximal(s)) covers.emplace_back("e" + std::to_string(mx), "#top");
  return canonical_form(FiniteLattice::build(ids, covers)).digest;
}

}  // namespace

std::vector<FiniteLattice> exhaustive_small_lattices(int max_size) {
  if (max_size < 1) fail(Err::SizeBound, "max_size must be positive");
  if (max_size > 8) fail(Err::SizeTooLarge, "exhaustive enumeration is guarded to 8 elements");

  std::vector<FiniteLattice> out;
  SemiState start;
  start.n = 1;
  start.down = {1u};
  std::map<std::string, SemiState> layer{{semi_canon_key(start), start}};

  for (int size = 1; size <= max_size; ++size) {
    for (const auto& [key, st] : layer) {
      if (semi_maximal(st).size() == 1) {
        std::vector<std::string> ids;
        for (int x = 0; x < st.n; ++x) ids.push_back("e" + std::to_string(x));
        out.push_back(FiniteLattice::build(ids, semi_covers(st)));
      }
    }
    if (size == max_size) break;

    std::map<std::string, SemiState> next;
    for (const auto& [key, st] : layer) {
      for (uint32_t A = 1; A < (1u << st.n); ++A) {
        bool antichain = true;
        for (int x = 0; x < st.n && antichain; ++x) {
          if ((A & (1u << x)) == 0) continue;
          for (int y = 0; y < st.n && antichain; ++y) {
            if (x == y || (A & (1u << y)) == 0) continue;
            if (st.down[static_cast<size_t>(y)] & (1u << x)) antichain = false;
          }
        }
        if (!antichain) continue;

        // Meets with the new element must stay well defined: for every w,
        // the meet set {a ^ w : a in A} needs a unique maximum.
        bool closed = true;
        for (int w = 0; w < st.n && closed; ++w) {
          std::vector<uint32_t> meets;
          for (int a = 0; a < st.n; ++a)
            if (A & (1u << a))
              meets.push_back(st.down[static_cast<size_t>(a)] & st.down[static_cast<size_t>(w)]);
          uint32_t mx = meets[0];
          for (uint32_t m : meets)
            if ((mx | m) == m) mx = m;
          for (uint32_t m : meets)
            if ((m | mx) != mx) closed = false;
        }
        if (!closed) continue;

        SemiState child;
        child.n = st.n + 1;
        child.down = st.down;
        uint32_t d = 1u << st.n;
        for (int a = 0; a < st.n; ++a)
          if (A & (1u << a)) d |= st.down[static_cast<size_t>(a)];
        child.down.push_back(d);
        std::string ckey = semi_canon_key(child);
        next.emplace(std::move(ckey), std::move(child));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace slimlat
