#include "padplace/energy.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "padplace/errors.hpp"

namespace padplace {

namespace {

double cover_budget(const UavParams& p) {
  return p.e_max - hover_power(p) * p.delta - p.e_node / p.eta;
}

}  // namespace

void UavParams::validate() const {
  const struct {
    const char* name;
    double value;
  } fields[] = {{"e_max", e_max}, {"v_u", v_u},     {"p_mov", p_mov},
                {"p_blade", p_blade}, {"p_induced", p_induced},
                {"delta", delta}, {"e_node", e_node}, {"eta", eta}};
  for (const auto& f : fields) {
    if (!std::isfinite(f.value) || f.value <= 0.0) {
      throw InfeasibleParams(std::string("uav parameter '") + f.name +
                             "' must be finite and positive");
    }
  }
  if (eta > 1.0) throw InfeasibleParams("uav parameter 'eta' must be <= 1");
  if (cover_budget(*this) <= 0.0) {
    throw InfeasibleParams("battery cannot cover hovering over one node and charging it");
  }
}

double hover_power(const UavParams& params) { return params.p_blade + params.p_induced; }

FlightEnergy flight_energy(const UavParams& params, double t_m, std::size_t n_charged,
                           double e_rec) {
  FlightEnergy e;
  e.e_mov = params.p_mov * t_m;
  e.e_hov = hover_power(params) * (static_cast<double>(n_charged) * params.delta);
  e.e_charge = e_rec / params.eta;
  e.e_consume = (e.e_mov + e.e_hov) + e.e_charge;
  return e;
}

double d_max(const UavParams& params) { return params.e_max / params.p_mov * params.v_u; }

double d_cover(const UavParams& params) {
  const double budget = cover_budget(params);
  if (!(budget > 0.0)) {
    throw InfeasibleParams("charging radius is not positive for these uav parameters");
  }
  const double r = 0.5 * budget / params.p_mov * params.v_u;
  assert(r < 0.5 * d_max(params));
  return r;
}

}  // namespace padplace
