#pragma once

// Builtin quantum groups: group algebras C[G] and function algebras C(G)
// of small finite groups, the 8-dimensional Kac-Paljutkin quantum group,
// and tensor products.

#include <string>
#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

// A finite group as a multiplication table: table[i][j] = index of g_i g_j.
// Element 0 must be the identity.  validate() checks the full group axioms.
struct GroupTable {
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;

    int order() const { return static_cast<int>(table.size()); }
    int mul(int i, int j) const { return table[i][j]; }
    int inverse(int i) const;
    void validate() const;  // throws Error{parse} on a non-group table

    static GroupTable cyclic(int n);
    static GroupTable symmetric3();
    static GroupTable dihedral4();  // order 8
    static GroupTable product(const GroupTable& a, const GroupTable& b);
};

// C[G]: basis {g}, Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}, g* = g^{-1}.
std::pair<Algebra, HopfStructure> group_algebra(const GroupTable& g);

// C(G): indicator basis {d_g}, pointwise product, convolution coproduct.
std::pair<Algebra, HopfStructure> function_algebra(const GroupTable& g);

// Kac-Paljutkin: the 8-dimensional quantum group that is neither commutative
// nor cocommutative, realised as a cocycle twist of C[D_4] along its Klein
// four-subgroup.
std::pair<Algebra, HopfStructure> kac_paljutkin();

// Componentwise tensor product with Delta = (i (x) flip (x) i)(Delta_1 (x) Delta_2).
std::pair<Algebra, HopfStructure> tensor_product(const Algebra& a1, const HopfStructure& h1,
                                                 const Algebra& a2, const HopfStructure& h2);

// Label helpers for the builtins above.
std::vector<std::string> group_labels(const GroupTable& g);
std::vector<std::string> function_labels(const GroupTable& g);
std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

// Named builtin registry used by the CLI: z2, z4, s3-group, s3-function,
// kac-paljutkin, tensor:<a>,<b>.  Throws Error{parse} on unknown names.
QuantumGroup builtin(const std::string& name, double tol = 1e-9);
std::vector<std::string> builtin_names();

}  // namespace aqg
