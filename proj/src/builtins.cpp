#include "aqg/builtins.hpp"

#include <array>

namespace aqg {

int GroupTable::inverse(int i) const {
    for (int j = 0; j < order(); ++j)
        if (table[i][j] == 0) return j;
    throw Error(Error::Kind::parse, "group table: element without inverse");
}

void GroupTable::validate() const {
    const int n = order();
    if (n == 0) throw Error(Error::Kind::parse, "group table: empty");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw Error(Error::Kind::parse, "group table: not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw Error(Error::Kind::parse, "group table: entry out of range");
    for (int i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i)
            throw Error(Error::Kind::parse, "group table: element 0 is not an identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error(Error::Kind::parse, "group table: not associative");
    for (int i = 0; i < n; ++i) inverse(i);  // throws if missing
}

GroupTable GroupTable::cyclic(int n) {
    GroupTable g;
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.labels.push_back("e");
    for (int i = 1; i < n; ++i) g.labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return g;
}

GroupTable GroupTable::symmetric3() {
    // Elements as permutations of {0,1,2}: e, r=(012), r2, s=(01), rs, r2s.
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {1, 2, 0},
                                                      {2, 0, 1},
                                                      {1, 0, 2},
                                                      {2, 1, 0},
                                                      {0, 2, 1}}};
    auto compose = [&](int a, int b) {  // (a.b)(x) = a(b(x))
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (perms[i] == c) return i;
        return -1;
    };
    GroupTable g;
    g.table.assign(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g.table[i][j] = compose(i, j);
    g.labels = {"e", "r", "r2", "s", "rs", "r2s"};
    return g;
}

GroupTable GroupTable::dihedral4() {
    // <r,s | r^4 = s^2 = 1, s r = r^3 s>, elements r^a s^b, index a + 4b.
    GroupTable g;
    g.table.assign(8, std::vector<int>(8));
    auto idx = [](int a, int b) { return (a & 3) + 4 * (b & 1); };
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + a2 (-1)^{b1}} s^{b1+b2}
                    const int a = (a1 + (b1 ? 4 - a2 : a2)) % 4;
                    g.table[idx(a1, b1)][idx(a2, b2)] = idx(a, b1 ^ b2);
                }
    g.labels = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    return g;
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order();
    GroupTable g;
    g.table.assign(na * nb, std::vector<int>(na * nb));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    g.table[i1 * nb + j1][i2 * nb + j2] =
                        a.table[i1][i2] * nb + b.table[j1][j2];
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            g.labels.push_back(a.labels[i] + "," + b.labels[j]);
    return g;
}

std::vector<std::string> group_labels(const GroupTable& g) { return g.labels; }

std::vector<std::string> function_labels(const GroupTable& g) {
    std::vector<std::string> out;
    for (const auto& l : g.labels) out.push_back("d_" + l);
    return out;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + "|" + y);
    return out;
}

std::pair<Algebra, HopfStructure> group_algebra(const GroupTable& g) {
    g.validate();
    const int n = g.order();
    Algebra alg;
    alg.dim = n;
    alg.mult = Matrix::Zero(n, n * n);
    alg.star = Matrix::Zero(n, n);
    alg.unit = Vector::Zero(n);
    alg.unit(0) = 1.0;
    HopfStructure h;
    h.comult = Matrix::Zero(n * n, n);
    h.counit = Covector::Ones(n);
    h.antipode = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) alg.mult(g.mul(i, j), i * n + j) = 1.0;
        alg.star(g.inverse(i), i) = 1.0;
        h.antipode(g.inverse(i), i) = 1.0;
        h.comult(i * n + i, i) = 1.0;  // Delta(g) = g (x) g
    }
    return {alg, h};
}

std::pair<Algebra, HopfStructure> function_algebra(const GroupTable& g) {
    g.validate();
    const int n = g.order();
    Algebra alg;
    alg.dim = n;
    alg.mult = Matrix::Zero(n, n * n);
    alg.star = Matrix::Zero(n, n);
    alg.unit = Vector::Ones(n);
    HopfStructure h;
    h.comult = Matrix::Zero(n * n, n);
    h.counit = Covector::Zero(n);
    h.counit(0) = 1.0;
    h.antipode = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        alg.mult(i, i * n + i) = 1.0;  // pointwise product of indicators
        alg.star(i, i) = 1.0;
        h.antipode(g.inverse(i), i) = 1.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.mul(a, b) == i) h.comult(a * n + b, i) = 1.0;  // convolution coproduct
    }
    return {alg, h};
}

std::pair<Algebra, HopfStructure> tensor_product(const Algebra& a1, const HopfStructure& h1,
                                                 const Algebra& a2, const HopfStructure& h2) {
    const Eigen::Index n1 = a1.dim, n2 = a2.dim, n = n1 * n2;
    Algebra alg;
    alg.dim = n;
    // (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2: permute middle legs, multiply.
    const Matrix mid_mult = kron(eye(n1), kron(flip(n2, n1), eye(n2)));
    alg.mult = kron(a1.mult, a2.mult) * mid_mult;
    alg.star = kron(a1.star, a2.star);
    alg.unit = kron_vec(a1.unit, a2.unit);
    HopfStructure h;
    const Matrix mid_comult = kron(eye(n1), kron(flip(n1, n2), eye(n2)));
    h.comult = mid_comult * kron(h1.comult, h2.comult);
    h.counit = kron_cov(h1.counit, h2.counit);
    h.antipode = kron(h1.antipode, h2.antipode);
    return {alg, h};
}

namespace {

// Klein four-group bookkeeping for the Kac-Paljutkin presentation: v encodes
// x^{v&1} y^{v>>1}; sigma swaps the x and y exponents.
int klein_mul(int v1, int v2) { return v1 ^ v2; }
int klein_sigma(int v) { return ((v & 1) << 1) | ((v >> 1) & 1); }

}  // namespace

std::pair<Algebra, HopfStructure> kac_paljutkin() {
    // Generators x, y, z with
    //   x^2 = y^2 = 1, xy = yx, z x = y z, z y = x z,
    //   z^2 = q := (1 + x + y - xy)/2,     (q^2 = 1)
    //   x* = x, y* = y, z* = q z           (z is unitary),
    //   Delta(x) = x(x)x, Delta(y) = y(x)y,
    //   Delta(z) = (z(x)z + yz(x)z + z(x)xz - yz(x)xz)/2,
    //   eps(x) = eps(y) = eps(z) = 1, S(x) = x, S(y) = y, S(z) = z.
    // Basis: w z^a with w in {1,x,y,xy}, flat index 4a + v.
    const int n = 8;
    auto eidx = [](int a, int v) { return 4 * a + v; };

    Vector q = Vector::Zero(4);
    q << 0.5, 0.5, 0.5, -0.5;

    Algebra alg;
    alg.dim = n;
    alg.mult = Matrix::Zero(n, n * n);
    alg.star = Matrix::Zero(n, n);
    alg.unit = Vector::Zero(n);
    alg.unit(0) = 1.0;
    for (int v1 = 0; v1 < 4; ++v1)
        for (int a1 = 0; a1 < 2; ++a1)
            for (int v2 = 0; v2 < 4; ++v2)
                for (int a2 = 0; a2 < 2; ++a2) {
                    // (w1 z^a1)(w2 z^a2) = w1 sigma^a1(w2) z^(a1+a2), z^2 = q.
                    const int i = eidx(a1, v1), j = eidx(a2, v2);
                    const int w = klein_mul(v1, a1 ? klein_sigma(v2) : v2);
                    if (a1 + a2 <= 1) {
                        alg.mult(eidx(a1 + a2, w), i * n + j) = 1.0;
                    } else {
                        for (int u = 0; u < 4; ++u)
                            alg.mult(klein_mul(w, u), i * n + j) += q(u);
                    }
                }
    for (int v = 0; v < 4; ++v) {
        alg.star(v, v) = 1.0;  // the Klein part is self-adjoint
        // (w z)* = z* w = q sigma(w) z.
        for (int u = 0; u < 4; ++u)
            alg.star(eidx(1, klein_mul(u, klein_sigma(v))), eidx(1, v)) += q(u);
    }

    HopfStructure h;
    h.counit = Covector::Ones(n);
    h.antipode = Matrix::Zero(n, n);
    for (int v = 0; v < 4; ++v) {
        h.antipode(v, v) = 1.0;
        h.antipode(eidx(1, klein_sigma(v)), eidx(1, v)) = 1.0;  // S(wz) = sigma(w) z
    }
    // Delta on the basis as an algebra homomorphism from the generator images.
    const Vector X = Vector::Unit(n, eidx(0, 1)), Y = Vector::Unit(n, eidx(0, 2)),
                 Z = Vector::Unit(n, eidx(1, 0)), XZ = Vector::Unit(n, eidx(1, 1)),
                 YZ = Vector::Unit(n, eidx(1, 2));
    const Vector dx = kron_vec(X, X), dy = kron_vec(Y, Y);
    const Vector dz = 0.5 * (kron_vec(Z, Z) + kron_vec(YZ, Z) + kron_vec(Z, XZ) -
                             kron_vec(YZ, XZ));
    h.comult.resize(n * n, n);
    for (int v = 0; v < 4; ++v)
        for (int a = 0; a < 2; ++a) {
            Vector d = kron_vec(alg.unit, alg.unit);
            if (v & 1) d = alg.mul2(d, dx);
            if (v & 2) d = alg.mul2(d, dy);
            if (a) d = alg.mul2(d, dz);
            h.comult.col(eidx(a, v)) = d;
        }
    return {alg, h};
}

namespace {

QuantumGroup builtin_impl(const std::string& name, double tol);

QuantumGroup parse_tensor(const std::string& arg, double tol) {
    const auto comma = arg.find(',');
    if (comma == std::string::npos)
        throw Error(Error::Kind::parse, "tensor builtin: expected tensor:<a>,<b>");
    const QuantumGroup q1 = builtin_impl(arg.substr(0, comma), tol);
    const QuantumGroup q2 = builtin_impl(arg.substr(comma + 1), tol);
    auto [alg, h] = tensor_product(q1.alg, q1.hopf, q2.alg, q2.hopf);
    return make_quantum_group(alg, h, tol, true, tensor_labels(q1.basis_labels, q2.basis_labels));
}

QuantumGroup builtin_impl(const std::string& name, double tol) {
    if (name.rfind("tensor:", 0) == 0) return parse_tensor(name.substr(7), tol);
    if (name == "z2" || name == "z4") {
        const GroupTable g = GroupTable::cyclic(name == "z2" ? 2 : 4);
        auto [alg, h] = group_algebra(g);
        return make_quantum_group(alg, h, tol, true, group_labels(g));
    }
    if (name == "s3-group") {
        const GroupTable g = GroupTable::symmetric3();
        auto [alg, h] = group_algebra(g);
        return make_quantum_group(alg, h, tol, true, group_labels(g));
    }
    if (name == "s3-function") {
        const GroupTable g = GroupTable::symmetric3();
        auto [alg, h] = function_algebra(g);
        return make_quantum_group(alg, h, tol, true, function_labels(g));
    }
    if (name == "kac-paljutkin") {
        auto [alg, h] = kac_paljutkin();
        return make_quantum_group(alg, h, tol, true,
                                  {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"});
    }
    throw Error(Error::Kind::parse, "unknown builtin '" + name + "'");
}

}  // namespace

QuantumGroup builtin(const std::string& name, double tol) { return builtin_impl(name, tol); }

std::vector<std::string> builtin_names() {
    return {"z2", "z4", "s3-group", "s3-function", "kac-paljutkin", "tensor:<a>,<b>"};
}

}  // namespace aqg
