#include "qent/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qent {

void validate_time_grid(std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("time grid is empty");
    if (!(times.front() >= 0.0)) throw std::invalid_argument("time grid starts before t = 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("time grid is not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

std::vector<double> uniform_grid(double t_max, std::size_t n) {
    if (n < 2) throw std::invalid_argument("uniform grid needs at least 2 points");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("uniform grid needs t_max > 0");
    }
    std::vector<double> t(n);
    const double h = t_max / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) t[i] = h * static_cast<double>(i);
    t.back() = t_max;
    return t;
}

}  // namespace qent
