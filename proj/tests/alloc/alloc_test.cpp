// Counts heap allocations made while the filters process a long stream after
// construction. Replaces the global allocation functions, so this lives in its
// own executable.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <new>

#include "adf/adaptive_filter.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"

namespace {
std::atomic<long> g_allocations{0};
}

void* operator new(std::size_t n) {
  g_allocations.fetch_add(1, std::memory_order_relaxed);
  if (void* p = std::malloc(n ? n : 1)) return p;
  throw std::bad_alloc();
}
void* operator new[](std::size_t n) { return operator new(n); }
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }

namespace {

template <typename Filter>
long count_steps(Filter& f, int n) {
  const double ts = 5e-4;
  // warm-up fills the window
  for (int i = 0; i < 400; ++i) f.step({i * ts, 0.01 * i * ts + 5e-5 * std::sin(i * 1.7)});
  const long before = g_allocations.load();
  for (int i = 400; i < n; ++i) {
    const double t = i * ts;
    f.step({t, 0.003 * std::sin(40 * t) + 8e-5 * std::sin(i * 1.7)});
  }
  return g_allocations.load() - before;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* name, long n) {
    std::printf("%s %s allocations=%ld\n", n == 0 ? "PASS" : "FAIL", name, n);
    failures += n != 0;
  };
  adf::AdaptiveDifferentiatingFilter general({1e-4, 140, {}});
  adf::AdaptiveDifferentiatingFilter uniform({1e-4, 140, 5e-4});
  adf::LinearFilteredDifferentiator ldf({600, 5e-4});
  adf::RobustExactDifferentiator red({8, 5e-4});
  report("adf", count_steps(general, 40000));
  report("adf_uniform", count_steps(uniform, 40000));
  report("ldf", count_steps(ldf, 40000));
  report("red", count_steps(red, 40000));
  return failures == 0 ? 0 : 1;
}
