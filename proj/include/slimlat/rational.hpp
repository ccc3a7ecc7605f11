#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace slimlat {

// Exact plane arithmetic for diagram geometry. All slope and incidence
// tests reduce to sign checks on cross products of Rat differences.
using Rat = boost::rational<long long>;

struct Point {
  Rat x;
  Rat y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::string rat_to_string(const Rat& r);

}  // namespace slimlat
