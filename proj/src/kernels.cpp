#include "symlab/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <string>

#include "symlab/error.hpp"

namespace symlab {

std::vector<std::uint64_t> filter_indices(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred,
                                          Exec exec) {
  std::vector<std::uint64_t> out;
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) out.push_back(i);
    return out;
  }

  const int nthreads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> local(nthreads);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(nthreads)
  {
    auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        if (pred(static_cast<std::uint64_t>(i))) mine.push_back(static_cast<std::uint64_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& v : local) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> digits(std::uint64_t index, std::uint64_t base, int length) {
  std::vector<std::uint64_t> d(length);
  for (auto& x : d) {
    x = index % base;
    index /= base;
  }
  return d;
}

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > budget / base) throw InputError("enumeration budget exceeded: " + std::to_string(base) + "^" +
                                            std::to_string(exp) + " > " + std::to_string(budget));
    r *= base;
  }
  return r;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace symlab
