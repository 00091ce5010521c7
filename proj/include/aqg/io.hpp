#pragma once

// JSON serialisation of quantum-group definitions (schema "aqg-v1").
//
// Complex numbers are stored as [re, im] pairs, giving bit-exact round
// trips.  Multiplication is mult[i][j][k] with e_i e_j = sum_k m_ijk e_k;
// comult[i] is the row-major length-n^2 coordinate list of Delta(e_i)
// (index j*n + k, left factor slowest); matrices act on coordinate
// columns, entry [r][c] = row r, column c.  A "haar" field, when present,
// is verified rather than trusted.

#include <string>

#include "aqg/algebra.hpp"

namespace aqg {

struct QGDocument {
    Algebra alg;
    HopfStructure hopf;
    std::vector<std::string> basis_labels;
    std::optional<Functional> haar;
};

QGDocument parse_document(const std::string& json_text);     // throws Error{parse}
std::string serialize_document(const QGDocument& doc);       // schema aqg-v1
QGDocument document_of(const QuantumGroup& q, bool include_haar = true);

QGDocument load_document(const std::string& path);
void save_document(const std::string& path, const QGDocument& doc);

// Full pipeline: parse + axiom check + Haar solve/verify.  Throws
// Error{parse|axiom|haar}.
QuantumGroup load_quantum_group(const std::string& path, double tol = 1e-9);
QuantumGroup quantum_group_of(const QGDocument& doc, double tol = 1e-9);

}  // namespace aqg
