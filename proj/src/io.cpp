#include "aqg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aqg {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(Error::Kind::parse, "expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                        const char* what) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw Error(Error::Kind::parse, std::string("bad shape for ") + what);
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
            throw Error(Error::Kind::parse, std::string("bad shape for ") + what);
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    if (!m.allFinite()) throw Error(Error::Kind::parse, std::string("non-finite entries in ") + what);
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Vector vector_from_json(const json& j, Eigen::Index n, const char* what) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
        throw Error(Error::Kind::parse, std::string("bad shape for ") + what);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_from_json(j[i]);
    if (!v.allFinite()) throw Error(Error::Kind::parse, std::string("non-finite entries in ") + what);
    return v;
}

}  // namespace

QGDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Error::Kind::parse, std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object() || j.value("schema", std::string()) != "aqg-v1")
        throw Error(Error::Kind::parse, "missing or unsupported schema (expected \"aqg-v1\")");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw Error(Error::Kind::parse, "missing integer field dim");
    const Eigen::Index n = j["dim"].get<Eigen::Index>();
    if (n < 1 || n > 512) throw Error(Error::Kind::parse, "dim out of range");

    QGDocument doc;
    doc.alg.dim = n;
    // mult[i][j][k]
    if (!j.contains("mult")) throw Error(Error::Kind::parse, "missing field mult");
    const json& m = j["mult"];
    if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != n)
        throw Error(Error::Kind::parse, "bad shape for mult");
    doc.alg.mult = Matrix::Zero(n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!m[i].is_array() || static_cast<Eigen::Index>(m[i].size()) != n)
            throw Error(Error::Kind::parse, "bad shape for mult");
        for (Eigen::Index jj = 0; jj < n; ++jj) {
            const Vector col = vector_from_json(m[i][jj], n, "mult");
            doc.alg.mult.col(i * n + jj) = col;
        }
    }
    doc.alg.star = matrix_from_json(j.at("star"), n, n, "star");
    doc.alg.unit = vector_from_json(j.at("unit"), n, "unit");
    doc.hopf.comult = Matrix(n * n, n);
    {
        const json& cm = j.at("comult");
        if (!cm.is_array() || static_cast<Eigen::Index>(cm.size()) != n)
            throw Error(Error::Kind::parse, "bad shape for comult");
        for (Eigen::Index i = 0; i < n; ++i)
            doc.hopf.comult.col(i) = vector_from_json(cm[i], n * n, "comult");
    }
    doc.hopf.counit = Covector(vector_from_json(j.at("counit"), n, "counit").transpose());
    doc.hopf.antipode = matrix_from_json(j.at("antipode"), n, n, "antipode");
    if (j.contains("basis_labels")) {
        for (const auto& l : j["basis_labels"]) doc.basis_labels.push_back(l.get<std::string>());
        if (static_cast<Eigen::Index>(doc.basis_labels.size()) != n)
            throw Error(Error::Kind::parse, "bad shape for basis_labels");
    }
    if (j.contains("haar"))
        doc.haar = Covector(vector_from_json(j["haar"], n, "haar").transpose());
    return doc;
}

std::string serialize_document(const QGDocument& doc) {
    const Eigen::Index n = doc.alg.dim;
    json j;
    j["schema"] = "aqg-v1";
    j["dim"] = n;
    if (!doc.basis_labels.empty()) j["basis_labels"] = doc.basis_labels;
    json mult = json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
        json row = json::array();
        for (Eigen::Index jj = 0; jj < n; ++jj)
            row.push_back(vector_to_json(doc.alg.mult.col(i * n + jj)));
        mult.push_back(row);
    }
    j["mult"] = mult;
    j["star"] = matrix_to_json(doc.alg.star);
    j["unit"] = vector_to_json(doc.alg.unit);
    json cm = json::array();
    for (Eigen::Index i = 0; i < n; ++i) cm.push_back(vector_to_json(doc.hopf.comult.col(i)));
    j["comult"] = cm;
    j["counit"] = vector_to_json(Vector(doc.hopf.counit.transpose()));
    j["antipode"] = matrix_to_json(doc.hopf.antipode);
    if (doc.haar) j["haar"] = vector_to_json(Vector(doc.haar->transpose()));
    return j.dump(1);
}

QGDocument document_of(const QuantumGroup& q, bool include_haar) {
    QGDocument doc;
    doc.alg = q.alg;
    doc.hopf = q.hopf;
    doc.basis_labels = q.basis_labels;
    if (include_haar) doc.haar = q.mod.haar;
    return doc;
}

QGDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Kind::parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

void save_document(const std::string& path, const QGDocument& doc) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::parse, "cannot write " + path);
    out << serialize_document(doc) << "\n";
}

QuantumGroup quantum_group_of(const QGDocument& doc, double tol) {
    if (doc.haar)
        return make_quantum_group_with_haar(doc.alg, doc.hopf, *doc.haar, tol, doc.basis_labels);
    return make_quantum_group(doc.alg, doc.hopf, tol, true, doc.basis_labels);
}

QuantumGroup load_quantum_group(const std::string& path, double tol) {
    return quantum_group_of(load_document(path), tol);
}

}  // namespace aqg
