#include "nilmlab/sample.hpp"

#include <cmath>

namespace nilm {

PowerSample derive_sample(int64_t t_ms, double active_w, double energy_wh) {
    PowerSample s;
    s.t_ms = t_ms;
    const double p = active_w < 0.0 ? 0.0 : active_w;
    const double q = p * kReactiveFraction;
    s.active_w = static_cast<float>(p);
    s.reactive_var = static_cast<float>(q);
    s.voltage_v = static_cast<float>(kGridVoltageV);
    s.current_a = static_cast<float>(std::sqrt(p * p + q * q) / kGridVoltageV);
    s.energy_wh = static_cast<float>(energy_wh);
    return s;
}

}  // namespace nilm
