#include "adf/slope_envelope.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace adf {

SlopeEnvelope::SlopeEnvelope(double delta, std::size_t capacity)
    : delta_(delta),
      capacity_(capacity),
      lower_(capacity),
      upper_(capacity),
      lower_max_(capacity),
      upper_min_(capacity) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("SlopeEnvelope: delta must be positive");
  }
  if (capacity == 0) {
    throw std::invalid_argument("SlopeEnvelope: capacity must be positive");
  }
}

void SlopeEnvelope::add_right(const SampleRing& buf) {
  assert(buf.size() >= 2);
  const std::size_t len = std::min({size_ + 1, capacity_, buf.size() - 1});
  const Sample& newest = buf.back(0);
  const double band = 2.0 * delta_;

  // m_k(W+) = max(m_{k-1}(W), pair(l+1, l+1-k)). Walking k downwards lets the
  // update run in place: slot k-1 is read before it is overwritten.
  for (std::size_t k = len; k >= 2; --k) {
    const Sample& anchor = buf.back(k);
    const double dt = newest.t - anchor.t;
    const double dx = newest.x - anchor.x;
    lower_[k - 1] = std::max(lower_[k - 2], (dx - band) / dt);
    upper_[k - 1] = std::min(upper_[k - 2], (dx + band) / dt);
  }
  {
    const Sample& prev = buf.back(1);
    const double dt = newest.t - prev.t;
    const double dx = newest.x - prev.x;
    lower_[0] = (dx - band) / dt;
    upper_[0] = (dx + band) / dt;
  }
  size_ = len;

  lower_max_[0] = lower_[0];
  upper_min_[0] = upper_[0];
  for (std::size_t k = 1; k < len; ++k) {
    lower_max_[k] = std::max(lower_max_[k - 1], lower_[k]);
    upper_min_[k] = std::min(upper_min_[k - 1], upper_[k]);
  }
}

void SlopeEnvelope::remove_left() {
  assert(size_ >= 1);
  --size_;
}

}  // namespace adf
