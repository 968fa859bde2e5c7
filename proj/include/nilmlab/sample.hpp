#pragma once

#include <cstdint>

namespace nilm {

// One timestamped meter reading. Everything the register codec carries is
// IEEE-754 binary32, so the in-memory sample holds float fields; timestamps
// stay integer milliseconds in the simulated time domain.
struct PowerSample {
    int64_t t_ms = 0;
    float active_w = 0.0f;
    float reactive_var = 0.0f;
    float voltage_v = 0.0f;
    float current_a = 0.0f;
    float energy_wh = 0.0f;

    friend bool operator==(const PowerSample&, const PowerSample&) = default;
};

inline constexpr double kGridVoltageV = 230.0;
// Reactive power is synthesized as a fixed fraction of active power,
// equivalent to a constant power factor of 0.95: tan(acos(0.95)).
inline constexpr double kReactiveFraction = 0.3286841;

// Fills in the dependent electrical quantities from active power and the
// running energy integral.
PowerSample derive_sample(int64_t t_ms, double active_w, double energy_wh);

}  // namespace nilm
