// fock.hpp: brute-force evolution of the dephasing Hamiltonian in a
// truncated Fock space of a few bath modes.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qent/dephasing.hpp"
#include "qent/oracles/bath.hpp"
#include "qent/qubit.hpp"

namespace qent::oracles {

class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double weight)
        : std::runtime_error(what), top_level_weight(weight) {}
    double top_level_weight;
};

struct FockEvolutionResult {
    QubitDensityMatrix rho_a;
    std::vector<double> rho_b_spectrum;  // descending
    double top_level_weight{0.0};        // largest population in any mode's top Fock level
};

inline constexpr std::size_t kMaxFockModes = 3;
inline constexpr int kMaxFockLevel = 10;
inline constexpr double kTruncationLeakTolerance = 1e-6;

/// Builds the full Hamiltonian of the qubit plus `bath` (at most three modes,
/// each truncated at n_max quanta), propagates the product initial state by
/// exact diagonalization and traces out each side. Throws TruncationError if
/// the top Fock level of any mode holds more than 1e-6 of the norm.
FockEvolutionResult fock_truncated_evolution(const DiscreteBath& bath, int n_max,
                                             const dephasing::DephasingInitialState& init,
                                             double omega0, double t);

}  // namespace qent::oracles
