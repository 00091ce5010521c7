#pragma once

// Finite-dimensional Hopf *-algebras by structure constants.
//
// Elements are coordinate columns in a fixed basis e_0..e_{n-1}.  All
// structure data are plain matrices acting on coordinates:
//
//   mult     n  x n^2 : mult * (x (x) y) = coordinates of the product xy
//   star     n  x n   : coordinates of a* = star * conj(x)   (antilinear)
//   unit     n        : coordinates of 1
//   comult   n^2 x n  : coordinates of Delta(x) in A (x) A
//   counit   1  x n
//   antipode n  x n
//
// Finite dimension and non-degeneracy make A unital with M(A) = A and
// M(A (x) A) = A (x) A, so every multiplier-algebra statement is realised
// inside A itself.

#include <optional>
#include <string>
#include <vector>

#include "aqg/report.hpp"
#include "aqg/tensor.hpp"

namespace aqg {

using Element = Vector;      // coordinate column of length n
using Functional = Covector; // coordinate row of length n

struct Algebra {
    Eigen::Index dim = 0;
    Matrix mult;   // n x n^2
    Matrix star;   // n x n
    Vector unit;   // n

    Element mul(const Element& a, const Element& b) const;
    Element star_of(const Element& a) const;
    // Left/right multiplication operators on coordinates.
    Matrix lmul(const Element& a) const;
    Matrix rmul(const Element& a) const;

    // Multiplication on A (x) A (componentwise on elementary tensors).
    Vector mul2(const Vector& u, const Vector& v) const;

    void check_shapes() const;
};

struct HopfStructure {
    Matrix comult;     // n^2 x n
    Covector counit;   // 1 x n
    Matrix antipode;   // n x n
};

// The canonical bijections of A (x) A and friends, assembled columnwise.
struct HopfMaps {
    Matrix t1;        // a (x) b -> Delta(a)(b (x) 1)
    Matrix t2;        // a (x) b -> Delta(a)(1 (x) b)
    Matrix t3;        // a (x) b -> (b (x) 1) Delta(a)
    Matrix t4;        // a (x) b -> (1 (x) b) Delta(a)
    Eigen::PartialPivLU<Matrix> t1_lu;
    Eigen::PartialPivLU<Matrix> t2_lu;
};

HopfMaps build_hopf_maps(const Algebra& alg, const HopfStructure& hopf);

// One residual per defining axiom; failures are reported, not thrown.
Report check_hopf_axioms(const Algebra& alg, const HopfStructure& hopf, double tol);

// Derived Haar/modular data (filled by the haar module).
struct ModularData {
    Functional haar;        // phi, normalised so phi(1) = 1
    Functional haar_right;  // psi = phi . S
    Element delta_elt;      // group-like modular element
    Complex mu = 1.0;       // unit-modulus twist in phi(S(a)) = mu phi(delta a)
    Matrix rho;             // modular automorphism: phi(ab) = phi(b rho(a))
    bool tracial = false;   // rho == identity within tolerance
    Matrix gram;            // G_ij = phi(e_i* e_j), positive definite
    double gram_min_eig = 0.0;
    Matrix hat;             // B_ij = phi(e_i e_j); Fourier pairing matrix
    Eigen::PartialPivLU<Matrix> hat_lu;
};

struct QuantumGroup {
    Algebra alg;
    HopfStructure hopf;
    HopfMaps maps;
    ModularData mod;
    std::vector<std::string> basis_labels;  // optional, may be empty
    double tol = 1e-9;

    Eigen::Index dim() const { return alg.dim; }
    Element basis(Eigen::Index i) const { return Vector::Unit(alg.dim, i); }
    Vector apply_comult(const Element& a) const { return hopf.comult * a; }
    Element apply_antipode(const Element& a) const { return hopf.antipode * a; }
    Element apply_antipode_inv(const Element& a) const;
    Complex apply_counit(const Element& a) const { return (hopf.counit * a)(0); }
    Complex haar_of(const Element& a) const { return (mod.haar * a)(0); }
};

// Full construction pipeline: axiom check, Haar solve, modular data.
// With strict=true any axiom failure throws Error{axiom} naming the first
// violated check and a failed Haar solve throws Error{haar}; with
// strict=false construction proceeds best-effort (used for fault-injection
// diagnostics).
QuantumGroup make_quantum_group(const Algebra& alg, const HopfStructure& hopf,
                                double tol = 1e-9, bool strict = true,
                                std::vector<std::string> labels = {});

// Same pipeline but reusing a user-supplied candidate Haar functional after
// verifying it (untrusted input path).
QuantumGroup make_quantum_group_with_haar(const Algebra& alg, const HopfStructure& hopf,
                                          const Functional& haar_candidate, double tol,
                                          std::vector<std::string> labels = {});

}  // namespace aqg
