#include "rloops/kernels.hpp"

#include <algorithm>
#include <limits>

#include "rloops/congruence.hpp"

namespace rloops::kernels {

namespace {

std::array<Elem, 3> decode(std::uint64_t code, std::uint64_t n) {
  return {static_cast<Elem>(code / (n * n)), static_cast<Elem>(code / n % n), static_cast<Elem>(code % n)};
}

std::vector<std::pair<Elem, Elem>> ordered_pairs(std::size_t n) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

}  // namespace

std::optional<std::array<Elem, 3>> nonassociative_triple_serial(const RightLoop& s) {
  const std::size_t n = s.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z))) return std::array<Elem, 3>{x, y, z};
  return std::nullopt;
}

std::optional<std::array<Elem, 3>> nonassociative_triple_omp(const RightLoop& s) {
  const auto n = static_cast<std::uint64_t>(s.order());
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = none;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t xi = 0; xi < rows; ++xi) {
    const auto x = static_cast<Elem>(xi);
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = s.op(x, y);
      for (Elem z = 0; z < n; ++z)
        if (s.op(xy, z) != s.op(x, s.op(y, z))) {
          best = std::min(best, (x * n + y) * n + z);
          break;
        }
    }
  }
  if (best == none) return std::nullopt;
  return decode(best, n);
}

std::vector<std::vector<Elem>> principal_congruence_labels_serial(const RightLoop& s) {
  std::vector<std::vector<Elem>> out;
  for (auto [a, b] : ordered_pairs(s.order())) {
    const Congruence c = principal_congruence(s, a, b);
    out.emplace_back(c.labels().begin(), c.labels().end());
  }
  return out;
}

std::vector<std::vector<Elem>> principal_congruence_labels_omp(const RightLoop& s) {
  const auto pairs = ordered_pairs(s.order());
  return map_indexed(
      pairs.size(),
      [&](std::size_t i) {
        const Congruence c = principal_congruence(s, pairs[i].first, pairs[i].second);
        return std::vector<Elem>(c.labels().begin(), c.labels().end());
      },
      Exec::parallel);
}

}  // namespace rloops::kernels
