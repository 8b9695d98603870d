#pragma once

#include <cstdint>

#include "bilat/interp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bilat {

// Every exhaustive sweep (4^n interpretation spaces, 2^n oracle subsets)
// runs through these kernels. The serial path is the reference; the OpenMP
// path partitions the index space and writes to disjoint slots, so both
// produce identical results and the tests compare them directly.
enum class ExecMode { serial, parallel };

template <typename Fn>
void for_each_index(std::uint64_t count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::uint64_t>(i));
    return;
#endif
  }
  for (std::uint64_t i = 0; i < count; ++i) fn(i);
}

// Chunked sweep: fn(begin, end) runs once per contiguous range, so scratch
// buffers hoist out of the per-index loop instead of being reallocated (or
// shared and contended) across workers.
template <typename Fn>
void for_each_chunk(std::uint64_t count, ExecMode mode, Fn&& fn) {
  if (count == 0) return;
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    std::uint64_t chunk = count / 64;
    if (chunk < 1024) chunk = 1024;
    long long chunks = static_cast<long long>((count + chunk - 1) / chunk);
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < chunks; ++c) {
      std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      std::uint64_t end = begin + chunk < count ? begin + chunk : count;
      fn(begin, end);
    }
    return;
#endif
  }
  fn(std::uint64_t{0}, count);
}

// Indices whose predicate holds, in ascending order.
template <typename Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t count, ExecMode mode, Pred&& pred) {
  std::vector<char> flags(count, 0);
  for_each_index(count, mode,
                 [&](std::uint64_t i) { flags[i] = pred(i) ? 1 : 0; });
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

inline std::uint64_t four_space_size(size_t atom_count) {
  if (atom_count > 31)
    throw limit_error("interpretation space exceeds 64-bit indexing");
  return std::uint64_t{1} << (2 * atom_count);
}

// Digit decode into a caller-owned buffer (the allocation-free kernel form).
inline void four_values_at(std::uint64_t idx, std::span<four::Value> out) {
  constexpr auto order = four::Value::all();
  for (size_t a = out.size(); a-- > 0;) {
    out[a] = order[idx & 3];
    idx >>= 2;
  }
}

// Interpretation index: atom 0 is the most significant base-4 digit, digit
// order bot < f < t < top.
inline Interpretation<four::Value> four_interp_at(
    const std::shared_ptr<const AtomTable>& atoms, std::uint64_t idx) {
  Interpretation<four::Value> out(atoms, four::Value::bot());
  four_values_at(idx, out.values_mut());
  return out;
}

inline std::uint64_t four_index_of(const Interpretation<four::Value>& i) {
  std::uint64_t idx = 0;
  for (size_t a = 0; a < i.size(); ++a)
    idx = (idx << 2) | static_cast<std::uint64_t>(i[a].enum_index());
  return idx;
}

}  // namespace bilat
