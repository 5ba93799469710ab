#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a serial twin that is the
// reference implementation; tests assert that both return identical results.

#include <array>
#include <cstdint>
#include <exception>
#include <type_traits>
#include <optional>
#include <utility>
#include <vector>

#include "rloops/exec.hpp"
#include "rloops/right_loop.hpp"

namespace rloops::kernels {

std::optional<std::array<Elem, 3>> nonassociative_triple_serial(const RightLoop& s);
std::optional<std::array<Elem, 3>> nonassociative_triple_omp(const RightLoop& s);

/// Class labels of Cg(a, b) for every pair a < b, in (a, b) lexicographic order.
std::vector<std::vector<Elem>> principal_congruence_labels_serial(const RightLoop& s);
std::vector<std::vector<Elem>> principal_congruence_labels_omp(const RightLoop& s);

/// Evaluates fn(i) for i in [0, count) and returns the results in index order.
/// An exception from any call is rethrown after the loop; when several calls
/// throw, the one with the smallest index wins, so failures are deterministic.
template <class Fn>
auto map_indexed(std::size_t count, Fn&& fn, Exec exec) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k].emplace(fn(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace rloops::kernels
