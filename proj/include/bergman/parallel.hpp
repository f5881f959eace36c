#pragma once

// Data-parallel reductions shared by the numerical kernels.
//
// Every parallel kernel in this project reduces through chunked_sum: the index
// range is cut into fixed-size chunks that do not depend on the thread count,
// each chunk is summed left to right, and the chunk totals are combined in
// index order. Results are therefore bit-identical for any OMP_NUM_THREADS,
// which the report determinism contract relies on.
//
// serial_sum is the plain left-to-right loop kept as the reference the
// parallel path is tested against (agreement to rounding, not bitwise).

#include <cstddef>
#include <vector>

namespace bergman {

enum class Exec { serial, parallel };

inline constexpr std::size_t kReductionChunk = 4096;

template <class T, class F>
T serial_sum(std::size_t begin, std::size_t end, F&& term) {
  T acc{};
  for (std::size_t i = begin; i < end; ++i) acc += term(i);
  return acc;
}

template <class T, class F>
T chunked_sum(std::size_t begin, std::size_t end, F&& term, std::size_t chunk = kReductionChunk) {
  if (end <= begin) return T{};
  const std::size_t count = end - begin;
  const std::size_t nchunks = (count + chunk - 1) / chunk;
  std::vector<T> partial(nchunks);
  const auto n = static_cast<long long>(nchunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < n; ++c) {
    const std::size_t lo = begin + static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = lo + chunk < end ? lo + chunk : end;
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  T total{};
  for (const T& v : partial) total += v;
  return total;
}

/// Evaluates term(i) for every i into a vector in parallel; order preserved.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& term) {
  std::vector<T> out(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
  return out;
}

template <class T, class F>
T sum(Exec exec, std::size_t begin, std::size_t end, F&& term) {
  return exec == Exec::parallel ? chunked_sum<T>(begin, end, term) : serial_sum<T>(begin, end, term);
}

}  // namespace bergman
