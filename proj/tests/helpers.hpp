#pragma once

// Reference helpers for tests: plain-vector permutation arithmetic and
// seeded generators. Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rloops/right_loop.hpp"
#include "rloops/transversal.hpp"

namespace testing {

using Img = std::vector<rloops::Point>;

// p then q
inline Img then(const Img& p, const Img& q) {
  Img r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Img images(const rloops::Perm& p) { return Img(p.images().begin(), p.images().end()); }

inline std::set<Img> closure(const std::vector<Img>& gens) {
  std::set<Img> out;
  Img id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<rloops::Point>(i);
  std::vector<Img> todo{id};
  out.insert(id);
  while (!todo.empty()) {
    const Img x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Img y = then(x, g);
      if (out.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return out;
}

// Random right loop: column y is a random bijection sending 0 to y.
inline rloops::RightLoop random_right_loop(std::size_t n, rloops::SplitMix64& rng) {
  std::vector<std::vector<rloops::Elem>> rows(n, std::vector<rloops::Elem>(n));
  for (rloops::Elem x = 0; x < n; ++x) rows[x][0] = x;
  for (rloops::Elem y = 1; y < n; ++y) {
    std::vector<rloops::Elem> rest;
    for (rloops::Elem v = 0; v < n; ++v)
      if (v != y) rest.push_back(v);
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng.below(i)]);
    rows[0][y] = y;
    for (rloops::Elem x = 1; x < n; ++x) rows[x][y] = rest[x - 1];
  }
  return rloops::RightLoop::from_table(rows);
}

inline bool associative(const rloops::RightLoop& s) {
  const auto n = static_cast<rloops::Elem>(s.order());
  for (rloops::Elem x = 0; x < n; ++x)
    for (rloops::Elem y = 0; y < n; ++y)
      for (rloops::Elem z = 0; z < n; ++z)
        if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z))) return false;
  return true;
}

}  // namespace testing
