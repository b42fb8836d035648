// trajectory.hpp: time series of qubit observables produced by the models.

#pragma once

#include <span>
#include <vector>

#include "qent/qubit.hpp"

namespace qent {

struct TrajectoryRecord {
    double t{0.0};
    double primary{0.0};  // gamma_vac(t) for dephasing, |c1(t)|^2 for Jaynes-Cummings
    double v{1.0};        // Bloch modulus
    double entropy{0.0};  // nats
    BlochVector bloch{};  // full Bloch vector in the Schroedinger picture
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;

    std::size_t size() const noexcept { return records.size(); }
};

/// Throws std::invalid_argument unless `times` is non-empty, non-negative and
/// strictly increasing.
void validate_time_grid(std::span<const double> times);

/// n uniformly spaced points on [0, t_max], n >= 2.
std::vector<double> uniform_grid(double t_max, std::size_t n);

}  // namespace qent
