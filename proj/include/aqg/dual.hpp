#pragma once

// The dual quantum group on the Fourier basis.
//
// For a in A the functional a^ = a.phi acts by a^(x) = phi(x a).  The map
// a -> a^ is a bijection, and the images e_i^ of the coordinate basis are
// used as the coordinate basis of the dual: every dual computation below is
// a matrix in these coordinates.  The pairing matrix B_ij = phi(e_i e_j)
// converts dual coordinates to covectors on A: cov(a^) = (B a)^T.
//
// Dual structure maps:
//   product      w1 w2 = (w1 (x) w2) Delta
//   involution   w*(a) = conj(w(S(a)*))
//   coproduct    solved from ((w1 (x) 1) Dhat(w2))(a (x) b) = (w1 (x) w2)(Delta(a)(1 (x) b)),
//                re-verified against (Dhat(w1)(1 (x) w2))(a (x) b) = (w1 (x) w2)((a (x) 1) Delta(b))
//   counit       eps^(a^) = phi(a),  antipode  S^(a^) = a^ . S
//   right-invariant functional  psi^(a^) = eps(a)

#include "aqg/algebra.hpp"
#include "aqg/report.hpp"

namespace aqg {

// Fourier transform and its inverse in coordinates: fourier(a) returns the
// covector of a^ on A; fourier_inv takes such a covector back to A.  In the
// e_i^ coordinates of the dual the transform is the identity map, so most
// callers only ever need these two.
Covector fourier(const QuantumGroup& q, const Element& a);
Element fourier_inv(const QuantumGroup& q, const Covector& omega);

// The dual quantum group as a full QuantumGroup on the e_i^ basis, with its
// own Haar data recomputed by the Haar solver.  strict=false defers axiom
// failures to the residual reports (fault-diagnostic path).
QuantumGroup dual_aqg(const QuantumGroup& q, bool strict = true);

// Canonical double-dual map Theta(a)(w) = w(a), as a coordinate matrix from
// A to the double dual's basis.  Verified to be a Hopf-*-isomorphism by
// double_dual_report.
Matrix double_dual_iso(const QuantumGroup& q, const QuantumGroup& dual, const QuantumGroup& ddual);
Report double_dual_report(const QuantumGroup& q, double tol);

// Antilinear conjugation map F(a^) = (S(a*))^ in dual coordinates:
// coords(F(w)) = conj_map_matrix * conj(coords(w)).
Matrix conj_map_matrix(const QuantumGroup& q);

// Modular automorphism of the dual: rho^(a^) = (S^2(a) delta^{-1})^.
Matrix dual_rho_matrix(const QuantumGroup& q);

// Element c with c^ equal to the unit of the dual algebra; it satisfies
// c^ w = w for every dual element.
Element support_companion(const QuantumGroup& q, const QuantumGroup& dual);

// Residual suite for the duality identities: the Fourier-star identity,
// module shifts by the modular element, the dual modular map, the
// conjugation map's antilinearity/antimultiplicativity/involutivity, the
// support-companion slice identity, the slice-convolution identity and the
// double-slice exchange identity, plus the structural dual checks
// (psi^ right-invariance, unit of the dual, commutative <-> cocommutative).
Report lemma_suite(const QuantumGroup& q, double tol);

}  // namespace aqg
