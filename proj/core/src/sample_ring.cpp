#include "adf/sample_ring.hpp"

#include <cassert>
#include <stdexcept>

namespace adf {

SampleRing::SampleRing(std::size_t capacity)
    : capacity_(capacity), slots_(2 * capacity) {
  if (capacity == 0) {
    throw std::invalid_argument("SampleRing: capacity must be positive");
  }
}

void SampleRing::push(const Sample& s) {
  slots_[next_] = s;
  slots_[next_ + capacity_] = s;
  next_ = (next_ + 1) % capacity_;
  if (size_ < capacity_) ++size_;
}

void SampleRing::clear() {
  size_ = 0;
  next_ = 0;
}

const Sample& SampleRing::back(std::size_t k) const {
  assert(k < size_);
  // newest lives at next_ - 1 in the upper copy
  return slots_[next_ + capacity_ - 1 - k];
}

std::span<const Sample> SampleRing::newest(std::size_t n) const {
  assert(n <= size_);
  const std::size_t end = next_ + capacity_;
  return {slots_.data() + (end - n), n};
}

}  // namespace adf
