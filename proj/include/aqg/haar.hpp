#pragma once

// Haar functional solver and derived modular data.
//
// The left-invariant functional is found as the nullspace of the stacked
// linear system (i (x) phi) Delta(e_i) - phi(e_i) 1 = 0 via SVD; the
// nullspace must be exactly one-dimensional (threshold 1e-10 * sigma_max)
// and the resulting functional positive definite on the Gram form
// G_ij = phi(e_i* e_j).  Normalisation phi(1) = 1 is always applied.

#include "aqg/algebra.hpp"
#include "aqg/report.hpp"

namespace aqg {

// Full pipeline used by make_quantum_group: solve for phi, then derive
// psi, delta, mu, rho and the Gram/pairing matrices.  With strict=false a
// defective nullspace or indefinite Gram matrix does not throw (diagnostic
// mode for fault-injected inputs).
ModularData solve_haar_and_derive(const QuantumGroup& q, double tol, bool strict = true);

// Verify a user-supplied candidate functional instead of solving, then
// derive the same data.  Throws Error{haar} if the candidate is not a
// positive normalised left-invariant functional.
ModularData verify_haar_and_derive(const QuantumGroup& q, const Functional& candidate, double tol);

// Residual suite over the derived data: left/right invariance,
// Gram positivity, group-likeness of delta, |mu| = 1, the rho identities
// and strong left invariance.
Report haar_modular_report(const QuantumGroup& q, double tol);

// Residual of (i (.) phi)((1 (x) a) Delta(b)) = S((i (.) phi)(Delta(a)(1 (x) b)))
// over all basis pairs.
double strong_left_invariance_residual(const QuantumGroup& q);

}  // namespace aqg
