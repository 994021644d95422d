#ifndef FQR_PARAMS_HPP
#define FQR_PARAMS_HPP

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fqr {

// Configuration problems (bad flags, bad files, out-of-range physics).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failures (eigensolver breakdown, truncation too small, ...).
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Waveform { Sine, Sawtooth, Tophat };

std::string to_string(Waveform w);
Waveform waveform_from_string(const std::string& s);

// Physical and truncation parameters. Energies are in units of omega_c,
// times in units of 1/omega_c; omega_c stays explicit so formulas read
// like the model definition.
struct ModelParams {
    double omega_c = 1.0;   // cavity frequency, the global unit
    double omega_a = 1.0;   // TLS transition frequency
    double eta0    = 0.0;   // static normalized coupling g/omega_c
    double eta_m   = 0.5;   // modulation amplitude of the coupling
    double omega_m = 0.5;   // modulation frequency
    double gamma   = 0.1;   // phenomenological damping of off-diagonal terms
    int n_fock = 30;        // photon Fock levels retained
    int n_j    = 16;        // dressed states retained
    int m_max  = 20;        // Fourier mode cutoff |m| <= m_max
    int l_max  = 20;        // sideband cutoff |l| <= l_max
    Waveform waveform = Waveform::Sine;

    // Drive period; derived, never stored.
    double period() const { return 2.0 * std::numbers::pi / omega_m; }

    // Throws config_error when any invariant is violated.
    void validate() const;

    // Stable hash of the physics-relevant fields, used to tie derived
    // objects (dressed bases, Floquet solutions) to their parameters.
    std::uint64_t hash() const;
};

} // namespace fqr

#endif
