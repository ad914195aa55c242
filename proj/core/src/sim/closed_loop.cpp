#include "adf/sim/closed_loop.hpp"

#include <cmath>
#include <stdexcept>

namespace adf::sim {

void LoopConfig::validate() const {
  plant.validate();
  pid.validate();
  noise.validate();
  reference.validate();
  if (!(duration > 0.0)) throw std::invalid_argument("duration: must be positive");
  if (std::abs(plant.ts - pid.ts) > 1e-12 * plant.ts) {
    throw std::invalid_argument("ts: plant and controller periods differ");
  }
}

LoopTrace run_closed_loop(const LoopConfig& cfg, Differentiator& diff) {
  cfg.validate();
  const double ts = cfg.plant.ts;
  const auto n = static_cast<std::size_t>(std::llround(cfg.duration / ts));

  Plant plant(cfg.plant);
  PidController pid(cfg.pid);
  NoiseSource noise(cfg.noise);
  diff.reset();

  LoopTrace tr;
  for (auto* v : {&tr.t, &tr.r, &tr.x_true, &tr.v_true, &tr.x_meas, &tr.noise, &tr.u}) v->reserve(n);
  tr.dx_est.reserve(n);
  tr.r_star.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * ts;
    const ReferencePoint ref = evaluate(cfg.reference, t);
    const double x_true = plant.position();
    const double v_true = plant.velocity();
    const double w = noise.next();
    const double x_meas = x_true + w;

    const std::optional<double> dx = diff.step({t, x_meas});
    const double u = pid.step(ref.value, x_meas, dx, ref.rate);
    plant.step(u);

    tr.t.push_back(t);
    tr.r.push_back(ref.value);
    tr.x_true.push_back(x_true);
    tr.v_true.push_back(v_true);
    tr.x_meas.push_back(x_meas);
    tr.noise.push_back(w);
    tr.dx_est.push_back(dx);
    tr.u.push_back(u);
    tr.r_star.push_back(diff.window());
  }
  return tr;
}

}  // namespace adf::sim
