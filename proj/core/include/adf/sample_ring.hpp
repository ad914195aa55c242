#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adf/sample.hpp"

namespace adf {

/// Fixed-capacity ring of the most recent samples.
///
/// Every sample is stored twice, at `pos` and `pos + capacity`, so the newest
/// `n` samples are always one contiguous span (oldest first). Storage is
/// allocated once in the constructor.
class SampleRing {
 public:
  explicit SampleRing(std::size_t capacity);

  void push(const Sample& s);
  void clear();

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return size_ == 0; }
  bool full() const { return size_ == capacity_; }

  /// k = 0 is the newest sample, k = size() - 1 the oldest.
  const Sample& back(std::size_t k = 0) const;

  /// The newest `n` samples, oldest first. Requires n <= size().
  std::span<const Sample> newest(std::size_t n) const;

 private:
  std::size_t capacity_;
  std::size_t size_ = 0;
  std::size_t next_ = 0;  // slot the next push writes to, in [0, capacity)
  std::vector<Sample> slots_;
};

}  // namespace adf
