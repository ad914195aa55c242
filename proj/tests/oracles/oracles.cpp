#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace adf::oracle {

namespace {

using ld = long double;

ld scale_of(std::span<const Sample> w, double delta) {
  ld s = delta;
  for (const Sample& p : w) s = std::max<ld>(s, std::abs(static_cast<ld>(p.x)));
  return s;
}

}  // namespace

bool feasible_lp(std::span<const Sample> window, double delta) {
  const std::size_t n = window.size();
  if (n < 2) return true;
  const ld t_l = window.back().t;
  const ld tol = 1e-14L * scale_of(window, delta);

  auto satisfies = [&](ld k, ld b) {
    for (const Sample& p : window) {
      const ld r = static_cast<ld>(p.x) - k * (static_cast<ld>(p.t) - t_l) - b;
      if (std::abs(r) > static_cast<ld>(delta) + tol) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ld si = static_cast<ld>(window[i].t) - t_l;
      const ld sj = static_cast<ld>(window[j].t) - t_l;
      for (int gi : {-1, 1}) {
        for (int gj : {-1, 1}) {
          const ld yi = window[i].x + gi * static_cast<ld>(delta);
          const ld yj = window[j].x + gj * static_cast<ld>(delta);
          const ld k = (yi - yj) / (si - sj);
          const ld b = yi - k * si;
          if (satisfies(k, b)) return true;
        }
      }
    }
  }
  return false;
}

double chebyshev_deviation(std::span<const Sample> window) {
  const std::size_t n = window.size();
  ld best = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t m = j + 1; m < n; ++m) {
        const ld ti = window[i].t, tj = window[j].t, tm = window[m].t;
        const ld xi = window[i].x, xj = window[j].x, xm = window[m].x;
        const ld chord = xi + (xm - xi) * (tj - ti) / (tm - ti);
        best = std::max(best, std::abs(xj - chord) / 2.0L);
      }
    }
  }
  return static_cast<double>(best);
}

Envelopes envelopes(std::span<const Sample> window, double delta) {
  Envelopes e;
  const std::size_t n = window.size();
  assert(n >= 2);
  const std::size_t l = n - 1;
  e.m = -std::numeric_limits<double>::infinity();
  e.big_m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= l; ++k) {
    const std::size_t j = l - k;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = j + 1; i <= l; ++i) {
      const double dt = window[i].t - window[j].t;
      const double dx = window[i].x - window[j].x;
      lo = std::max(lo, (dx - 2.0 * delta) / dt);
      hi = std::min(hi, (dx + 2.0 * delta) / dt);
    }
    e.lower.push_back(lo);
    e.upper.push_back(hi);
    e.m = std::max(e.m, lo);
    e.big_m = std::min(e.big_m, hi);
  }
  return e;
}

Line fit_normal_equations(std::span<const Sample> window) {
  const ld t_l = window.back().t;
  ld n = 0, s1 = 0, s2 = 0, x1 = 0, sx = 0;
  for (const Sample& p : window) {
    const ld s = static_cast<ld>(p.t) - t_l;
    n += 1;
    s1 += s;
    s2 += s * s;
    x1 += p.x;
    sx += s * p.x;
  }
  // [s2 s1; s1 n] [k; b] = [sx; x1]
  const ld det = s2 * n - s1 * s1;
  const ld k = (sx * n - s1 * x1) / det;
  const ld b = (s2 * x1 - s1 * sx) / det;
  return {static_cast<double>(k), static_cast<double>(b)};
}

double objective(std::span<const Sample> window, const Line& line) {
  const ld t_l = window.back().t;
  ld sum = 0;
  for (const Sample& p : window) {
    const ld r = p.x - line.slope * (static_cast<ld>(p.t) - t_l) - line.value;
    sum += r * r;
  }
  return static_cast<double>(sum);
}

Line fit_constrained_search(std::span<const Sample> window, double delta) {
  const ld t_l = window.back().t;
  ld ss = 0;
  for (const Sample& p : window) ss += (p.t - t_l) * (p.t - t_l);

  auto line_for = [&](ld b) {
    ld num = 0;
    for (const Sample& p : window) num += (p.t - t_l) * (p.x - b);
    return Line{static_cast<double>(num / ss), static_cast<double>(b)};
  };
  auto cost = [&](ld b) {
    const ld k = line_for(b).slope;
    ld sum = 0;
    for (const Sample& p : window) {
      const ld r = p.x - k * (p.t - t_l) - b;
      sum += r * r;
    }
    return sum;
  };

  const ld lo = static_cast<ld>(window.back().x) - delta;
  const ld step = 1e-3L * delta;
  const int steps = 2000;
  int best = 0;
  ld best_cost = cost(lo);
  for (int i = 1; i <= steps; ++i) {
    const ld c = cost(lo + step * i);
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
  }

  ld a = lo + step * std::max(0, best - 1);
  ld b = lo + step * std::min(steps, best + 1);
  const ld phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  while (b - a > 1e-8L * delta) {
    const ld c = b - phi * (b - a);
    const ld d = a + phi * (b - a);
    if (cost(c) <= cost(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return line_for((a + b) / 2.0L);
}

std::size_t best_window(std::span<const Sample> history, std::size_t r_max, double delta) {
  assert(history.size() >= 2);
  const std::size_t limit = std::min(r_max, history.size() - 1);
  std::size_t best = 1;
  for (std::size_t r = 1; r <= limit; ++r) {
    if (feasible_lp(history.subspan(history.size() - (r + 1)), delta)) best = r;
  }
  return best;
}

}  // namespace adf::oracle
