#include "slimlat/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace slimlat {

Direction opposite(Direction d) {
  switch (d) {
    case Direction::NW: return Direction::SE;
    case Direction::NE: return Direction::SW;
    case Direction::SW: return Direction::NE;
    case Direction::SE: return Direction::NW;
  }
  fail(Err::Internal, "bad direction");
}

Direction perpendicular_up(Direction d) {
  switch (d) {
    case Direction::NW: return Direction::NE;
    case Direction::NE: return Direction::NW;
    case Direction::SW: return Direction::SE;
    case Direction::SE: return Direction::SW;
  }
  fail(Err::Internal, "bad direction");
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::NW: return "NW";
    case Direction::NE: return "NE";
    case Direction::SW: return "SW";
    case Direction::SE: return "SE";
  }
  return "?";
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

Slope classify_edge(const DiagramLayout& lay, Elem lo, Elem hi) {
  Rat dx = lay.at(hi).x - lay.at(lo).x;
  Rat dy = lay.at(hi).y - lay.at(lo).y;
  if (dy <= Rat(0) || dy < (dx < Rat(0) ? -dx : dx))
    fail(Err::LayoutInvalid, "edge outside the normal angle range");
  if (dx == dy) return Slope::NormalUp;
  if (dx == -dy) return Slope::NormalDown;
  return Slope::Precipitous;
}

DiagramLayout layout_join_coords(const FiniteLattice& L, const JoinCoordinates& jc) {
  DiagramLayout lay;
  lay.pos.resize(static_cast<size_t>(L.size()));
  for (int x = 0; x < L.size(); ++x) {
    int i = jc.i[static_cast<size_t>(x)], j = jc.j[static_cast<size_t>(x)];
    lay.pos[static_cast<size_t>(x)] = Point{Rat(j - i), Rat(j + i)};
  }
  Report rep = validate_c1(L, lay);
  if (!rep.ok())
    fail(Err::LayoutInvalid,
         rep.violations.front().check + ": " + rep.violations.front().detail);
  return lay;
}

DiagramLayout compute_layout(const FiniteLattice& L) {
  return layout_join_coords(L, join_coordinates(L));
}

bool cone_leq(const Point& b, const Point& c) {
  if (b == c) return true;
  Rat dx = c.x - b.x, dy = c.y - b.y;
  return dy > Rat(0) && dy >= (dx < Rat(0) ? -dx : dx);
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != Rat(0)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sgn(const Rat& r) { return r < Rat(0) ? -1 : (r > Rat(0) ? 1 : 0); }

// Proper or improper intersection beyond a shared endpoint.
bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = sgn(cross(a, b, c)), d2 = sgn(cross(a, b, d));
  int d3 = sgn(cross(c, d, a)), d4 = sgn(cross(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  // Collinear overlap or an endpoint interior to the other segment.
  auto interior = [](const Point& p, const Point& s, const Point& t) {
    return on_segment(p, s, t) && p != s && p != t;
  };
  return interior(c, a, b) || interior(d, a, b) || interior(a, c, d) || interior(b, c, d);
}

}  // namespace

Report validate_c1(const FiniteLattice& L, const DiagramLayout& lay) {
  Report rep;
  const int n = L.size();
  if (static_cast<int>(lay.pos.size()) != n) {
    rep.violations.push_back({"positions", "layout size does not match the lattice"});
    return rep;
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (lay.at(x) == lay.at(y))
        rep.violations.push_back(
            {"distinct-positions", "'" + L.id(x) + "' and '" + L.id(y) + "' coincide"});

  for (const auto& [lo, hi] : L.cover_pairs()) {
    Rat dx = lay.at(hi).x - lay.at(lo).x;
    Rat dy = lay.at(hi).y - lay.at(lo).y;
    if (dy <= Rat(0)) {
      rep.violations.push_back(
          {"upward-edges", "edge (" + L.id(lo) + "," + L.id(hi) + ") does not rise"});
      continue;
    }
    if (dy < (dx < Rat(0) ? -dx : dx))
      rep.violations.push_back(
          {"angle-range", "edge (" + L.id(lo) + "," + L.id(hi) + ") leaves [45,135] degrees"});
  }
  if (!rep.ok()) return rep;

  // Edge rule: lower end in Mir(L) minus the boundary iff precipitous.
  {
    std::vector<uint8_t> mir(static_cast<size_t>(n), 0);
    for (Elem x : meet_irreducibles(L)) mir[static_cast<size_t>(x)] = 1;
    auto [lb, rb] = boundary_chains(L, lay);
    std::vector<uint8_t> bnd(static_cast<size_t>(n), 0);
    for (Elem x : lb) bnd[static_cast<size_t>(x)] = 1;
    for (Elem x : rb) bnd[static_cast<size_t>(x)] = 1;
    for (const auto& [lo, hi] : L.cover_pairs()) {
      bool interior_mir = mir[static_cast<size_t>(lo)] && !bnd[static_cast<size_t>(lo)];
      bool precip = classify_edge(lay, lo, hi) == Slope::Precipitous;
      if (interior_mir != precip)
        rep.violations.push_back({"edge-rule", "edge (" + L.id(lo) + "," + L.id(hi) + ") is " +
                                                   (precip ? "precipitous" : "normal") +
                                                   " but its lower end is " +
                                                   (interior_mir ? "" : "not ") +
                                                   "an interior meet-irreducible"});
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (L.leq(x, y) != cone_leq(lay.at(x), lay.at(y))) {
        rep.violations.push_back(
            {"cone-order", "order and cone order disagree on ('" + L.id(x) + "','" + L.id(y) + "')"});
      }
    }

  const auto& edges = L.cover_pairs();
  for (size_t e = 0; e < edges.size(); ++e)
    for (size_t f = e + 1; f < edges.size(); ++f) {
      const Point& a = lay.at(edges[e].first);
      const Point& b = lay.at(edges[e].second);
      const Point& c = lay.at(edges[f].first);
      const Point& d = lay.at(edges[f].second);
      if (segments_conflict(a, b, c, d))
        rep.violations.push_back(
            {"planarity", "edges (" + L.id(edges[e].first) + "," + L.id(edges[e].second) +
                              ") and (" + L.id(edges[f].first) + "," + L.id(edges[f].second) +
                              ") intersect"});
    }
  return rep;
}

std::pair<std::vector<Elem>, std::vector<Elem>> boundary_chains(const FiniteLattice& L,
                                                                const DiagramLayout& lay) {
  auto walk = [&](bool leftmost) {
    std::vector<Elem> chain{L.bottom()};
    Elem at = L.bottom();
    while (at != L.top()) {
      const auto& ups = L.upper_covers(at);
      if (ups.empty()) fail(Err::LayoutInvalid, "no upward path to the top");
      Elem pick = ups.front();
      for (Elem u : ups) {
        if (leftmost ? lay.at(u).x < lay.at(pick).x : lay.at(u).x > lay.at(pick).x) pick = u;
      }
      chain.push_back(pick);
      at = pick;
    }
    return chain;
  };
  return {walk(true), walk(false)};
}

bool on_boundary(const FiniteLattice& L, const DiagramLayout& lay, Elem x) {
  auto [lb, rb] = boundary_chains(L, lay);
  return std::find(lb.begin(), lb.end(), x) != lb.end() ||
         std::find(rb.begin(), rb.end(), x) != rb.end();
}

std::vector<Elem> ray_elements(const FiniteLattice& L, const DiagramLayout& lay, Elem u,
                               Direction d) {
  Rat sx = (d == Direction::NE || d == Direction::SE) ? Rat(1) : Rat(-1);
  Rat sy = (d == Direction::NE || d == Direction::NW) ? Rat(1) : Rat(-1);
  std::vector<Elem> hits;
  for (int x = 0; x < L.size(); ++x) {
    if (x == u) continue;
    Rat dx = lay.at(x).x - lay.at(u).x;
    Rat dy = lay.at(x).y - lay.at(u).y;
    if (dx * sy == dy * sx && dx * sx > Rat(0) && dy * sy > Rat(0)) hits.push_back(x);
  }
  std::sort(hits.begin(), hits.end(), [&](Elem a, Elem b) {
    Rat da = (lay.at(a).y - lay.at(u).y) * sy;
    Rat db = (lay.at(b).y - lay.at(u).y) * sy;
    return da < db;
  });
  return hits;
}

namespace {

// x coordinate of the chain polyline at height y; the chain is maximal so
// its segments span the whole vertical extent of the diagram.
Rat polyline_x_at(const DiagramLayout& lay, const std::vector<Elem>& chain, const Rat& y) {
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    const Point& p = lay.at(chain[k]);
    const Point& q = lay.at(chain[k + 1]);
    if (p.y <= y && y <= q.y) {
      if (p.y == q.y) return p.x;
      return p.x + (q.x - p.x) * (y - p.y) / (q.y - p.y);
    }
  }
  // y outside [bottom, top] cannot happen for elements of the lattice.
  fail(Err::Internal, "height outside the chain polyline");
}

std::vector<Elem> maximal_chain_through(const FiniteLattice& L, const DiagramLayout& lay, Elem v) {
  std::vector<Elem> down{v};
  Elem at = v;
  while (at != L.bottom()) {
    const auto& lows = L.lower_covers(at);
    Elem pick = lows.front();
    for (Elem u : lows)
      if (lay.at(u).x < lay.at(pick).x) pick = u;
    down.push_back(pick);
    at = pick;
  }
  std::reverse(down.begin(), down.end());
  at = v;
  while (at != L.top()) {
    const auto& ups = L.upper_covers(at);
    Elem pick = ups.front();
    for (Elem u : ups)
      if (lay.at(u).x < lay.at(pick).x) pick = u;
    down.push_back(pick);
    at = pick;
  }
  return down;
}

#ifndef NDEBUG
void all_maximal_chains_through(const FiniteLattice& L, Elem v,
                                std::vector<std::vector<Elem>>& out) {
  std::vector<std::vector<Elem>> downs{{v}};
  for (size_t head = 0; head < downs.size(); ++head) {
    if (downs[head].back() != L.bottom()) {
      auto base = downs[head];
      const auto& lows = L.lower_covers(base.back());
      for (size_t k = 0; k < lows.size(); ++k) {
        auto c = base;
        c.push_back(lows[k]);
        if (k == 0)
          downs[head] = std::move(c);
        else
          downs.push_back(std::move(c));
      }
      --head;
      continue;
    }
  }
  for (auto& dchain : downs) {
    std::reverse(dchain.begin(), dchain.end());
    std::vector<std::vector<Elem>> fulls{dchain};
    for (size_t head = 0; head < fulls.size(); ++head) {
      if (fulls[head].back() != L.top()) {
        auto base = fulls[head];
        const auto& ups = L.upper_covers(base.back());
        for (size_t k = 0; k < ups.size(); ++k) {
          auto c = base;
          c.push_back(ups[k]);
          if (k == 0)
            fulls[head] = std::move(c);
          else
            fulls.push_back(std::move(c));
        }
        --head;
        continue;
      }
    }
    for (auto& c : fulls) out.push_back(std::move(c));
  }
}
#endif

}  // namespace

bool left_of(const FiniteLattice& L, const DiagramLayout& lay, Elem u, Elem v) {
  if (!L.incomparable(u, v))
    fail(Err::NotIncomparable, "'" + L.id(u) + "' and '" + L.id(v) + "' are comparable");
  auto chain = maximal_chain_through(L, lay, v);
  bool result = lay.at(u).x < polyline_x_at(lay, chain, lay.at(u).y);
#ifndef NDEBUG
  if (L.size() <= 10) {
    std::vector<std::vector<Elem>> chains;
    all_maximal_chains_through(L, v, chains);
    for (const auto& c : chains)
      if ((lay.at(u).x < polyline_x_at(lay, c, lay.at(u).y)) != result)
        fail(Err::Internal, "left_of depends on the witness chain");
  }
#endif
  return result;
}

Report regular_meet_check(const FiniteLattice& L, const DiagramLayout& lay, Elem a, Elem b) {
  if (!L.incomparable(a, b))
    fail(Err::NotIncomparable, "'" + L.id(a) + "' and '" + L.id(b) + "' are comparable");
  Report rep;
  Elem c = L.meet(a, b);

  auto side = [&](Elem end, const char* tag) -> std::optional<Slope> {
    Interval iv = interval(L, c, end);
    for (size_t i = 0; i < iv.members.size(); ++i)
      for (size_t j = i + 1; j < iv.members.size(); ++j)
        if (L.incomparable(iv.members[i], iv.members[j])) {
          rep.violations.push_back({std::string("chain-") + tag,
                                    "[" + L.id(c) + "," + L.id(end) + "] is not a chain"});
          return std::nullopt;
        }
    std::sort(iv.members.begin(), iv.members.end(), [&](Elem x, Elem y) { return L.lt(x, y); });
    std::optional<Slope> slope;
    for (size_t k = 0; k + 1 < iv.members.size(); ++k) {
      Slope s = classify_edge(lay, iv.members[k], iv.members[k + 1]);
      if (s == Slope::Precipitous) {
        rep.violations.push_back({std::string("slope-") + tag,
                                  "edge (" + L.id(iv.members[k]) + "," + L.id(iv.members[k + 1]) +
                                      ") is precipitous"});
        return std::nullopt;
      }
      if (slope && *slope != s) {
        rep.violations.push_back({std::string("slope-") + tag,
                                  "[" + L.id(c) + "," + L.id(end) + "] mixes normal slopes"});
        return std::nullopt;
      }
      slope = s;
    }
    for (Elem x : iv.members) {
      if (x == end) continue;
      if (L.upper_covers(x).size() < 2)
        rep.violations.push_back({"meet-reducible", "'" + L.id(x) + "' in [" + L.id(c) + "," +
                                                        L.id(end) + ") is meet-irreducible"});
    }
    return slope;
  };

  auto sa = side(a, "left");
  auto sb = side(b, "right");
  if (sa && sb) {
    if (*sa && *sb && *sa == *sb)
      rep.violations.push_back({"orthogonal", "[" + L.id(c) + "," + L.id(a) + "] and [" + L.id(c) +
                                                  "," + L.id(b) + "] have the same slope"});
  }
  return rep;
}

Report theorem_part_i_check(const FiniteLattice& L) {
  if (!is_slim(L)) fail(Err::NotSlim, "part (i) applies to slim lattices");
  Report rep;
  for (const auto& [a, b] : incomparable_pairs(L)) {
    Elem c = L.meet(a, b);
    if (!is_chain_interval(L, c, a))
      rep.violations.push_back(
          {"interval-chain", "[" + L.id(c) + "," + L.id(a) + "] is not a chain"});
    if (!is_chain_interval(L, c, b))
      rep.violations.push_back(
          {"interval-chain", "[" + L.id(c) + "," + L.id(b) + "] is not a chain"});
  }
  return rep;
}

Report theorem_part_ii_check(const FiniteLattice& L, const DiagramLayout& lay) {
  if (!is_slim(L)) fail(Err::NotSlim, "part (ii) applies to slim semimodular lattices");
  if (!is_semimodular(L)) fail(Err::NotSemimodular, "part (ii) applies to semimodular lattices");
  Report rep;
  for (const auto& [a, b] : incomparable_pairs(L)) {
    Report one = regular_meet_check(L, lay, a, b);
    for (auto& v : one.violations) {
      v.detail = "pair ('" + L.id(a) + "','" + L.id(b) + "'): " + v.detail;
      rep.violations.push_back(v);
    }
  }
  return rep;
}

namespace {

// Deterministic decimal for SVG output. Positions coming from join
// coordinates are integers; loaded rationals are rounded to 6 digits.
std::string svg_num(const Rat& r) {
  long long num = r.numerator(), den = r.denominator();
  long long scaled = num * 1'000'000 / den;
  long long whole = scaled / 1'000'000, frac = std::llabs(scaled % 1'000'000);
  if (frac == 0) return std::to_string(whole);
  std::string f = std::to_string(frac);
  f.insert(f.begin(), 6 - f.size(), '0');
  while (!f.empty() && f.back() == '0') f.pop_back();
  return std::to_string(whole) + "." + f;
}

}  // namespace

std::string emit_svg(const FiniteLattice& L, const DiagramLayout& lay, const Marks* marks) {
  Report rep = validate_c1(L, lay);
  if (!rep.ok())
    fail(Err::LayoutInvalid, rep.violations.front().check + ": " + rep.violations.front().detail);

  const Rat scale(32);
  Rat minx = lay.at(0).x, maxx = lay.at(0).x, miny = lay.at(0).y, maxy = lay.at(0).y;
  for (const auto& p : lay.pos) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const Rat margin(24);
  auto X = [&](const Point& p) { return svg_num((p.x - minx) * scale + margin); };
  auto Y = [&](const Point& p) { return svg_num((maxy - p.y) * scale + margin); };

  std::vector<uint8_t> black(static_cast<size_t>(L.size()), 0), star(static_cast<size_t>(L.size()), 0);
  if (marks) {
    for (Elem x : marks->black) black[static_cast<size_t>(x)] = 1;
    for (Elem x : marks->stars) star[static_cast<size_t>(x)] = 1;
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << svg_num((maxx - minx) * scale + margin * 2) << "\" height=\""
     << svg_num((maxy - miny) * scale + margin * 2) << "\">\n";

  // Elements in identifier order so output is reproducible.
  std::vector<Elem> order(static_cast<size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });

  for (const auto& [lo, hi] : L.cover_pairs())
    os << "  <line x1=\"" << X(lay.at(lo)) << "\" y1=\"" << Y(lay.at(lo)) << "\" x2=\""
       << X(lay.at(hi)) << "\" y2=\"" << Y(lay.at(hi)) << "\" stroke=\"black\"/>\n";

  for (Elem x : order) {
    const Point& p = lay.at(x);
    if (star[static_cast<size_t>(x)]) {
      // five-point star glyph centred on the node, drawn with a local
      // transform so the path data stays position-independent
      os << "  <path transform=\"translate(" << X(p) << " " << Y(p) << ")\" d=\""
         << "M0 -10L2.351 -3.236L9.511 -3.09L3.804 1.236L5.878 8.09L0 4"
         << "L-5.878 8.09L-3.804 1.236L-9.511 -3.09L-2.351 -3.236Z\" fill=\"black\"/>\n";
    } else {
      os << "  <circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\""
         << (black[static_cast<size_t>(x)] ? 7 : 4) << "\" fill=\""
         << (black[static_cast<size_t>(x)] ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    os << "  <text x=\"" << X(p) << "\" y=\"" << Y(p) << "\" dx=\"10\" dy=\"4\" font-size=\"10\">"
       << L.id(x) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_tikz(const FiniteLattice& L, const DiagramLayout& lay, const Marks* marks) {
  Report rep = validate_c1(L, lay);
  if (!rep.ok())
    fail(Err::LayoutInvalid, rep.violations.front().check + ": " + rep.violations.front().detail);

  std::vector<uint8_t> black(static_cast<size_t>(L.size()), 0), star(static_cast<size_t>(L.size()), 0);
  if (marks) {
    for (Elem x : marks->black) black[static_cast<size_t>(x)] = 1;
    for (Elem x : marks->stars) star[static_cast<size_t>(x)] = 1;
  }

  std::vector<Elem> order(static_cast<size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return L.id(a) < L.id(b); });

  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.8]\n";
  for (size_t k = 0; k < order.size(); ++k) {
    Elem x = order[k];
    const Point& p = lay.at(x);
    const char* style = star[static_cast<size_t>(x)]
                            ? "star,star points=5,fill=black,inner sep=2pt"
                            : (black[static_cast<size_t>(x)] ? "circle,fill=black,inner sep=2.5pt"
                                                             : "circle,draw,fill=white,inner sep=1.6pt");
    os << "  \\node[" << style << "] (n" << k << ") at (" << rat_to_string(p.x) << ","
       << rat_to_string(p.y) << ") {};\n";
    os << "  \\node[anchor=west,font=\\scriptsize] at (" << rat_to_string(p.x) << ","
       << rat_to_string(p.y) << ") {" << L.id(x) << "};\n";
  }
  std::vector<size_t> where(static_cast<size_t>(L.size()));
  for (size_t k = 0; k < order.size(); ++k) where[static_cast<size_t>(order[k])] = k;
  for (const auto& [lo, hi] : L.cover_pairs())
    os << "  \\draw (n" << where[static_cast<size_t>(lo)] << ") -- (n"
       << where[static_cast<size_t>(hi)] << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace slimlat
