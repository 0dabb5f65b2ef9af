#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "dgd/types.hpp"

namespace dgd {

/// Largest value of a per-index deviation and the first index attaining it.
struct MaxDeviation {
  double value = 0.0;
  std::int64_t index = -1;

  void merge(MaxDeviation o) {
    if (o.index < 0) return;
    if (std::isnan(o.value)) o.value = std::numeric_limits<double>::infinity();
    if (index < 0 || o.value > value || (o.value == value && o.index < index)) *this = o;
  }
};

/// Evaluates fn(i) for i in [0, count) and returns the max-reduction.
/// The serial loop is the reference; the OpenMP loop must produce the same
/// result (ties resolve to the smallest index in both).
template <class Fn>
MaxDeviation max_deviation_over(std::int64_t count, Exec exec, Fn&& fn) {
  MaxDeviation best;
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i) best.merge({fn(i), i});
    return best;
  }
#pragma omp parallel
  {
    MaxDeviation local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < count; ++i) local.merge({fn(i), i});
#pragma omp critical(dgd_max_deviation)
    best.merge(local);
  }
  return best;
}

/// Runs fn(i) for i in [0, count); each index must write disjoint output.
template <class Fn>
void for_each_index(std::int64_t count, Exec exec, Fn&& fn) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) fn(i);
}

}  // namespace dgd
