#ifndef FQR_OPERATORS_HPP
#define FQR_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "fqr/params.hpp"

namespace fqr {

// Index convention for the TLS (x) Fock product space, fixed globally:
//   i = 2*n + s,  n in [0, n_fock) photon number (slow index),
//                 s in {0 = TLS ground, 1 = TLS excited} (fast index).
struct BasisDescriptor {
    int n_fock = 0;

    int dim() const { return 2 * n_fock; }
    int index(int n, int s) const { return 2 * n + s; }
    int photon_of(int i) const { return i / 2; }
    int spin_of(int i) const { return i % 2; }

    bool operator==(const BasisDescriptor&) const = default;
};

// Dense complex operator together with the basis it acts on. The matrix
// dimension is either 2 (bare TLS), n_fock (bare photon space) or
// 2*n_fock (product space); mixing requires explicit embedding.
struct OperatorMatrix {
    Eigen::MatrixXcd m;
    BasisDescriptor basis;
    bool hermitian_hint = false;

    Eigen::Index dim() const { return m.rows(); }
};

// max_ij |A - A^dag|
double hermiticity_defect(const Eigen::MatrixXcd& a);

// Annihilation operator a on the photon space: (a)_{n-1,n} = sqrt(n).
OperatorMatrix fock_ladder(const BasisDescriptor& basis);

// Number operator a^dag a on the photon space.
OperatorMatrix fock_number(const BasisDescriptor& basis);

// Quadrature X = a + a^dag on the photon space.
OperatorMatrix quadrature(const BasisDescriptor& basis);

enum class PauliAxis { X, Y, Z };

// Pauli matrices in the (s=0 ground, s=1 excited) index order.
//
// Sign convention, fixed project-wide: sigma_z = diag(-1, +1), so the
// excited state carries +1 and +(omega_a/2) sigma_z puts it at +omega_a/2.
// sigma_y = [[0, i], [-i, 0]] follows from requiring the standard algebra
// sigma_x sigma_y = i sigma_z in this index order.
OperatorMatrix pauli(PauliAxis axis);

// Tensor product onto the product space, consistent with i = 2n + s:
// entries (2n+s, 2n'+s') = fock_op(n,n') * tls_op(s,s').
OperatorMatrix embed(const OperatorMatrix& tls_op, const OperatorMatrix& fock_op,
                     const BasisDescriptor& basis);

using ScalarMap = std::function<std::complex<double>(double)>;

// Spectral application of a scalar function to a Hermitian operator:
// A = V diag(lambda) V^dag  ->  V diag(f(lambda)) V^dag.
// Requires hermiticity_defect(A) <= 1e-10 (absolute, on the max entry).
OperatorMatrix hermitian_function(const OperatorMatrix& a, const ScalarMap& f);

// Bessel function of the first kind J_m(x) for integer order, any sign of
// m and x (reduced to cyl_bessel_j via J_{-m}(x) = J_m(-x) = (-1)^m J_m(x)).
double bessel_j(int order, double x);

namespace tol {
// Absolute hermiticity tolerance on the max entry for solver inputs.
inline constexpr double hermitian_input = 1e-10;
} // namespace tol

} // namespace fqr

#endif
