#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adf/sample_ring.hpp"

namespace adf {

/// Slope bounds of a window anchored at its newest sample l.
///
/// For k = 1..size(), with anchor j = l - k:
///
///   lower()[k-1] = max over j < i <= l of (x_i - x_j - 2*delta) / (t_i - t_j)
///   upper()[k-1] = min over j < i <= l of (x_i - x_j + 2*delta) / (t_i - t_j)
///
/// A line within delta of every sample of the window W = {l - size(), ..., l}
/// exists iff max(lower) <= min(upper). Growing the window by a new sample on
/// the right costs O(size()); dropping the oldest sample is a prefix
/// truncation and costs O(1). Running prefix max/min are kept alongside so the
/// feasibility test is O(1) for every prefix length.
///
/// All storage is reserved up front for `capacity` anchors.
class SlopeEnvelope {
 public:
  SlopeEnvelope(double delta, std::size_t capacity);

  /// Extends the envelopes after `buf` received a new newest sample. The new
  /// length is min(size() + 1, capacity(), buf.size() - 1); when the cap is
  /// hit the oldest anchor falls off.
  void add_right(const SampleRing& buf);

  /// Drops the oldest anchor. Requires size() >= 1.
  void remove_left();

  void clear() { size_ = 0; }

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  double delta() const { return delta_; }

  std::span<const double> lower() const { return {lower_.data(), size_}; }
  std::span<const double> upper() const { return {upper_.data(), size_}; }

  /// m(W) and M(W) for the current window. Require size() >= 1.
  double max_lower() const { return lower_max_[size_ - 1]; }
  double min_upper() const { return upper_min_[size_ - 1]; }

  /// m(W) <= M(W). Ties count as feasible. Empty envelopes are feasible.
  bool feasible() const { return size_ == 0 || max_lower() <= min_upper(); }

 private:
  double delta_;
  std::size_t capacity_;
  std::size_t size_ = 0;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> lower_max_;  // prefix maxima of lower_
  std::vector<double> upper_min_;  // prefix minima of upper_
};

}  // namespace adf
