#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "adf/sample.hpp"

namespace adf {

/// Streaming derivative estimator. One sample in, at most one estimate out.
///
/// Implementations are single-stream state machines: they may be moved
/// between threads, but one instance must never be stepped concurrently.
class Differentiator {
 public:
  virtual ~Differentiator() = default;

  /// Feeds the next sample. Returns nullopt while no estimate exists yet.
  virtual std::optional<double> step(const Sample& s) = 0;

  virtual void reset() = 0;

  virtual std::string_view name() const = 0;

  /// Window size behind the latest estimate, for filters that adapt one.
  virtual std::optional<std::size_t> window() const { return std::nullopt; }
};

}  // namespace adf
