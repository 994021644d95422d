#ifndef FQR_HAMILTONIAN_HPP
#define FQR_HAMILTONIAN_HPP

#include <vector>

#include "fqr/operators.hpp"
#include "fqr/params.hpp"

namespace fqr {

// Normalized coupling eta(t) for the selected waveform. All waveforms are
// T-periodic with zero mean of the modulation part over one period:
//   sine:     eta0 + eta_m * sin(omega_m t)
//   sawtooth: eta0 + eta_m * saw(t),  saw rising -1 -> +1 over one period
//   tophat:   eta0 + eta_m * sq(t),   sq = +1 first half period, -1 second
double coupling_rate(double t, const ModelParams& p);

// Time-dependent Coulomb-gauge Hamiltonian on the product space:
//   H(t) = omega_c a^dag a
//        + (omega_a/2) { sigma_z cos[c(t)] + sigma_y sin[c(t)] },
// with c(t) = 2 (a + a^dag) eta(t). The photon-space cosine/sine are
// evaluated spectrally on the quadrature X.
OperatorMatrix h_fqr(double t, const ModelParams& p);

// Fourier mode H_m of H(t) for the sine waveform, via the Anger-Jacobi
// expansion of the exponentials of c(t):
//   H_m = omega_c a^dag a delta_{m0}
//       + (omega_a/2) { (sigma_z - i sigma_y)/2 exp(+i 2 X eta0)
//                     + (-1)^m (sigma_z + i sigma_y)/2 exp(-i 2 X eta0) }
//         J_m[2 X eta_m],
// with every photon factor a spectral function of X (they all commute).
// Other waveforms are rejected; use fourier_mode_numeric for those.
OperatorMatrix fourier_mode_analytic(int m, const ModelParams& p);

// Fourier mode via uniform sampling of H(t) over one period,
//   H_m = (1/N) sum_k H(t_k) exp(-i m omega_m t_k),
// which is the trapezoid rule for a periodic integrand. Works for every
// waveform. samples = 0 picks the default (256 for sine, 4096 for the
// discontinuous waveforms; the larger count controls aliasing of their
// slowly decaying harmonics, checked by doubling in the test suite).
OperatorMatrix fourier_mode_numeric(int m, const ModelParams& p, int samples = 0);

// Static part H_0 = fourier mode m = 0 (analytic for sine, numeric else).
OperatorMatrix static_hamiltonian(const ModelParams& p);

// Time-independent reference H_QRM built from the coupling at t = 0:
//   omega_c a^dag a + (omega_a/2){sigma_z cos[2 X eta(0)] + sigma_y sin[2 X eta(0)]}.
OperatorMatrix qrm_hamiltonian(const ModelParams& p);

// Modes m = 0..m_max in one pass (shares the quadrature eigensystem).
// Negative modes follow from H_{-m} = H_m^dag.
std::vector<OperatorMatrix> fourier_modes(const ModelParams& p);

} // namespace fqr

#endif
