#pragma once

// GNS representation, multiplicative unitary and Tomita data.
//
// All operators are expressed on the orthonormal frame obtained from the
// Cholesky factor C of the Gram matrix (C^H C = G, vectors Lambda(a) = C a),
// so adjoints are conjugate transposes and unitarity checks are literal.
//
// W is assembled columnwise from W (Lambda (x) Lambda)(Delta(b)(a (x) 1)) =
// Lambda(a) (x) Lambda(b) and then cross-checked against the conjugation
// characterisations of both coproducts; the redundancy catches convention
// drift.

#include "aqg/algebra.hpp"
#include "aqg/dual.hpp"
#include "aqg/report.hpp"

namespace aqg {

struct GnsSpace {
    Matrix orthonormalizer;      // C with C^H C = G
    Matrix orthonormalizer_inv;  // C^{-1}
    double gram_min_eig = 0.0;

    Vector lambda(const Element& a) const { return orthonormalizer * a; }
};

struct MultiplicativeUnitary {
    Matrix w;      // unitary on H (x) H
    Matrix w_hat;  // Sigma W^* Sigma
};

struct TomitaData {
    Matrix j;      // antiunitary: v -> j conj(v)
    Matrix nabla;  // positive definite
};

GnsSpace gns(const QuantumGroup& q);

// Left regular representation pi(a) Lambda(b) = Lambda(ab) and the dual
// representation pi^(w) Lambda(b) = Lambda(fourier_inv(w b^)), both on the
// orthonormal frame.
Matrix left_rep(const QuantumGroup& q, const GnsSpace& g, const Element& a);
Matrix dual_rep(const QuantumGroup& q, const QuantumGroup& dual, const GnsSpace& g,
                const Element& omega_coords);

MultiplicativeUnitary multiplicative_unitary(const QuantumGroup& q, const GnsSpace& g);

TomitaData tomita(const QuantumGroup& q, const GnsSpace& g);

// Residual suite: unitarity, pentagon, both conjugation identities, the
// slice-span equalities, membership of W in span(pi(A)) (x) span(pi^(A^)),
// adjoint-vs-star for both representations and the Tomita identities.
Report gns_report(const QuantumGroup& q, double tol);

}  // namespace aqg
