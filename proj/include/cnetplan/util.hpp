#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cnetplan::util {

/// Formats a double with 6 significant digits ("%.6g"). All CSV output
/// goes through this so reruns are byte-identical.
std::string format_sig(double value);

/// FNV-1a over a byte string; used for config provenance hashes.
std::uint64_t fnv1a(const std::string& data);

/// Nearest-rank percentile over a sorted ascending vector: the smallest
/// element whose cumulative count fraction reaches q. q=0.5 is the lower
/// median. Precondition: values non-empty and sorted, q in [0,1].
double nearest_rank(std::span<const double> sorted_values, double q);

/// Convenience: sorts a copy and takes the nearest-rank percentile.
double nearest_rank_of(std::vector<double> values, double q);

/// Runs fn(i) for i in [0, n) across at most `threads` workers in
/// contiguous chunks. threads <= 1 runs inline. fn must only write to
/// per-index slots so results are order-independent.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace cnetplan::util
