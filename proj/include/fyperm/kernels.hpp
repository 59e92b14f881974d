#pragma once

// Data-parallel histogram kernels.
//
// Both exhaustive enumeration of a code space and multi-stream Monte Carlo
// reduce to "evaluate f on many independent items, count the results".
// Each kernel has a serial reference and an OpenMP variant; they return
// identical histograms for identical inputs, whatever the thread count.
//
// Code-space kernels split the rank range [0, size) into contiguous chunks.
// Each chunk unranks its first code and then steps with advance(), so the
// per-item cost stays O(n).
//
// Sampling kernels split the samples over a fixed number of streams. Stream
// s owns SeededSource(seed, s) and a fixed slice of the samples, so the
// result depends only on (seed, streams, samples).

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fyperm/codec.hpp"
#include "fyperm/generator.hpp"

namespace fyperm::kernels {

using Histogram = std::vector<std::uint64_t>;

inline void bump(Histogram& h, std::size_t v) {
  if (v >= h.size()) h.resize(v + 1, 0);
  ++h[v];
}

inline void merge_into(Histogram& dst, const Histogram& src) {
  if (src.size() > dst.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

inline constexpr std::size_t kDefaultStreams = 64;

namespace detail {

template <class F>
void scan_codes(std::size_t n, bool strict, Rank begin, Rank end, F& value_of, Histogram& h) {
  if (begin >= end) return;
  TriangularCode code = unrank(begin, n, LexOrder::big_endian, strict);
  for (Rank r = begin; r < end; ++r) {
    const Permutation perm = fy_decode(code);
    bump(h, value_of(code, perm));
    code.advance();
  }
}

template <class Draw>
void scan_stream(std::uint64_t seed, std::size_t stream, std::uint64_t count, Draw& draw, Histogram& h) {
  SeededSource rng(seed, stream);
  for (std::uint64_t i = 0; i < count; ++i) bump(h, draw(rng));
}

inline std::uint64_t stream_share(std::uint64_t samples, std::size_t streams, std::size_t s) {
  return samples / streams + (s < samples % streams ? 1 : 0);
}

}  // namespace detail

/// value_of(const TriangularCode&, const Permutation&) -> std::size_t,
/// called once per code in big-endian lex order.
template <class F>
Histogram serial_code_histogram(std::size_t n, bool strict, F value_of) {
  Histogram h;
  detail::scan_codes(n, strict, 0, code_space_size(n, strict), value_of, h);
  return h;
}

template <class F>
Histogram parallel_code_histogram(std::size_t n, bool strict, F value_of) {
  const Rank total = code_space_size(n, strict);
  const auto threads = static_cast<Rank>(omp_get_max_threads());
  const Rank chunks = std::max<Rank>(1, std::min<Rank>(total, threads * 8));
  Histogram result;
#pragma omp parallel
  {
    Histogram local;
    F f = value_of;
#pragma omp for schedule(dynamic, 1)
    for (Rank c = 0; c < chunks; ++c) {
      detail::scan_codes(n, strict, c * total / chunks, (c + 1) * total / chunks, f, local);
    }
#pragma omp critical(fyperm_histogram_merge)
    merge_into(result, local);
  }
  return result;
}

/// draw(RandomSource&) -> std::size_t, called `samples` times in total.
template <class Draw>
Histogram serial_sample_histogram(std::uint64_t samples, std::uint64_t seed, Draw draw,
                                  std::size_t streams = kDefaultStreams) {
  Histogram h;
  for (std::size_t s = 0; s < streams; ++s)
    detail::scan_stream(seed, s, detail::stream_share(samples, streams, s), draw, h);
  return h;
}

template <class Draw>
Histogram parallel_sample_histogram(std::uint64_t samples, std::uint64_t seed, Draw draw,
                                    std::size_t streams = kDefaultStreams) {
  Histogram result;
  const auto stream_count = static_cast<std::int64_t>(streams);
#pragma omp parallel
  {
    Histogram local;
    Draw d = draw;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < stream_count; ++s) {
      const auto idx = static_cast<std::size_t>(s);
      detail::scan_stream(seed, idx, detail::stream_share(samples, streams, idx), d, local);
    }
#pragma omp critical(fyperm_histogram_merge)
    merge_into(result, local);
  }
  return result;
}

}  // namespace fyperm::kernels
