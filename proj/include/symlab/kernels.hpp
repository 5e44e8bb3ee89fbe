#pragma once

// Exhaustive enumeration over an index range, either serially or split across
// OpenMP threads. Both paths return the matching indices in increasing order,
// so results do not depend on the execution mode.

#include <cstdint>
#include <functional>
#include <vector>

namespace symlab {

enum class Exec { serial, parallel };

/// Indices i in [0, count) with pred(i) true. pred must be safe to call
/// concurrently when exec is parallel.
std::vector<std::uint64_t> filter_indices(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred,
                                          Exec exec = Exec::parallel);

/// Digits of index in base `base`, least significant first.
std::vector<std::uint64_t> digits(std::uint64_t index, std::uint64_t base, int length);

/// base^exp, throwing InputError when it exceeds `budget`.
std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t budget);

int thread_count();

}  // namespace symlab
