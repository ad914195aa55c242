#include "adf/sim/plant.hpp"

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace adf::sim {

void PlantModel::validate() const {
  if (!(den3 > 0.0 && den2 > 0.0 && den1 > 0.0)) {
    throw std::invalid_argument("plant: denominator coefficients must be positive");
  }
  if (!std::isfinite(gain)) throw std::invalid_argument("plant.gain: must be finite");
  if (!(ts > 0.0)) throw std::invalid_argument("plant.ts: must be positive");
  if (!(delay >= 0.0)) throw std::invalid_argument("plant.delay: must be non-negative");
  const double periods = delay / ts;
  if (std::abs(periods - std::round(periods)) > 1e-9 * std::max(1.0, periods)) {
    throw std::invalid_argument("plant.delay: must be a whole number of sampling periods");
  }
  if (clamp_position && !(x_min < x_max)) {
    throw std::invalid_argument("plant.x_min: must be below x_max");
  }
}

std::size_t PlantModel::delay_samples() const {
  return static_cast<std::size_t>(std::llround(delay / ts));
}

namespace {

const PlantModel& checked(const PlantModel& m) {
  m.validate();
  return m;
}

}  // namespace

Plant::Plant(const PlantModel& model)
    : model_(checked(model)), delay_line_(model.delay_samples(), 0.0) {
  // x''' = -(den2 x'' + den1 x' - gain u) / den3
  Eigen::Matrix4d aug = Eigen::Matrix4d::Zero();
  aug(0, 1) = 1.0;
  aug(1, 2) = 1.0;
  aug(2, 1) = -model_.den1 / model_.den3;
  aug(2, 2) = -model_.den2 / model_.den3;
  aug(2, 3) = model_.gain / model_.den3;

  // exp([A B; 0 0] ts) = [Ad Bd; 0 I]
  const Eigen::Matrix4d phi = (aug * model_.ts).exp();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) ad_[3 * r + c] = phi(r, c);
    bd_[r] = phi(r, 3);
  }
}

void Plant::reset() {
  state_ = {};
  std::fill(delay_line_.begin(), delay_line_.end(), 0.0);
  delay_head_ = 0;
}

double Plant::step(double u) {
  if (std::isnan(u)) throw std::invalid_argument("plant: NaN input");

  double applied = u;
  if (!delay_line_.empty()) {
    applied = delay_line_[delay_head_];
    delay_line_[delay_head_] = u;
    delay_head_ = (delay_head_ + 1) % delay_line_.size();
  }
  applied -= model_.load;

  std::array<double, 3> next{};
  for (int r = 0; r < 3; ++r) {
    next[r] = ad_[3 * r] * state_[0] + ad_[3 * r + 1] * state_[1] +
              ad_[3 * r + 2] * state_[2] + bd_[r] * applied;
  }
  state_ = next;

  if (model_.clamp_position) {
    if (state_[0] < model_.x_min) {
      state_[0] = model_.x_min;
      state_[1] = std::max(state_[1], 0.0);
      state_[2] = std::max(state_[2], 0.0);
    } else if (state_[0] > model_.x_max) {
      state_[0] = model_.x_max;
      state_[1] = std::min(state_[1], 0.0);
      state_[2] = std::min(state_[2], 0.0);
    }
  }
  return state_[0];
}

}  // namespace adf::sim
