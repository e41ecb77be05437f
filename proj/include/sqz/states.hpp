#ifndef SQZ_STATES_HPP
#define SQZ_STATES_HPP

#include <optional>
#include <string>
#include <variant>

#include "sqz/fock.hpp"

namespace sqz {

struct VacuumSpec {};
struct FockSpec {
    int m = 0;
};
struct CoherentSpec {
    Complex alpha;
};
struct CatSpec {
    Complex alpha;
    int parity = +1;  // +1 even, -1 odd
};
struct ThermalSpec {
    double temperature = 1.0;  // dimensionless, hbar*omega/k_B = 1
};

using StateSpec = std::variant<VacuumSpec, FockSpec, CoherentSpec, CatSpec, ThermalSpec>;

/// Canonical JSON encoding, e.g. {"kind":"coherent","alpha":[3.0,0.0]}.
std::string state_to_json(const StateSpec& spec);
StateSpec state_from_json(const std::string& json_text);

/// CLI shorthand: vacuum | fock:M | coherent:RE+IMj | cat:RE+IMj:+|- | thermal:T
StateSpec parse_state(const std::string& text);
std::string state_name(const StateSpec& spec);

DensityMatrix make_density(const StateSpec& spec, int cutoff);

/// Fock-basis amplitudes for the pure members of the family; nullopt for thermal.
std::optional<Vector> make_pure_vector(const StateSpec& spec, int cutoff);

/// Oscillator eigenfunction psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}.
double fock_wavefunction(unsigned n, double x);

/// Fills values[n] = psi_n(x) for n < values.size(), by the stable normalized
/// recursion (no overflow for any n).
void fock_wavefunctions(double x, std::vector<double>& values);

/// psi_alpha(x) = pi^{-1/4} exp(-x^2/2 + sqrt(2) alpha x - alpha^2/2 - |alpha|^2/2)
Complex coherent_wavefunction(Complex alpha, double x);

}  // namespace sqz

#endif
