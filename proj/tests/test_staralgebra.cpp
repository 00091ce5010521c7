#include <doctest.h>

#include "aqg/builtins.hpp"
#include "aqg/gns.hpp"
#include "aqg/staralgebra.hpp"

using namespace aqg;

namespace {

std::vector<Matrix> regular_images(const QuantumGroup& q) {
    const GnsSpace g = gns(q);
    std::vector<Matrix> out;
    for (Eigen::Index i = 0; i < q.dim(); ++i) out.push_back(left_rep(q, g, q.basis(i)));
    return out;
}

std::vector<Eigen::Index> block_dims(const StarAlgebraDecomposition& d) {
    std::vector<Eigen::Index> out;
    for (const auto& b : d.blocks) out.push_back(b.block_dim);
    return out;
}

}  // namespace

TEST_CASE("group algebra of S3 decomposes as 1+1+2") {
    auto q = builtin("s3-group");
    const auto dec = decompose_star_algebra(regular_images(q));
    CHECK(dec.algebra_dim == 6);
    CHECK(block_dims(dec) == std::vector<Eigen::Index>{1, 1, 2});
    // Regular representation carries each block with multiplicity = dimension.
    for (const auto& b : dec.blocks) CHECK(b.multiplicity == b.block_dim);
}

TEST_CASE("function algebra of S3 decomposes as six points") {
    auto q = builtin("s3-function");
    const auto dec = decompose_star_algebra(regular_images(q));
    CHECK(dec.n_blocks() == 6);
    for (const auto& b : dec.blocks) CHECK(b.block_dim == 1);
}

TEST_CASE("Kac-Paljutkin decomposes as C^4 + M_2") {
    auto q = builtin("kac-paljutkin");
    const auto dec = decompose_star_algebra(regular_images(q));
    CHECK(block_dims(dec) == std::vector<Eigen::Index>{1, 1, 1, 1, 2});
    Eigen::Index sum = 0;
    for (const auto& b : dec.blocks) sum += b.block_dim * b.block_dim;
    CHECK(sum == 8);
}

TEST_CASE("matrix units expand the algebra exactly") {
    auto q = builtin("kac-paljutkin");
    const auto imgs = regular_images(q);
    const auto dec = decompose_star_algebra(imgs);
    for (const auto& a : imgs) {
        const UnitExpansion e = expand_in_units(dec, a);
        CHECK(e.residual < 1e-9);
    }
    // And the units multiply back consistently: reconstruct a basis image.
    const auto units = dec.all_units();
    const UnitExpansion e0 = expand_in_units(dec, imgs[4]);
    Matrix rebuilt = Matrix::Zero(8, 8);
    for (size_t t = 0; t < units.size(); ++t)
        rebuilt += e0.coefficients(static_cast<Eigen::Index>(t)) * (*units[t]);
    CHECK(residual(rebuilt, imgs[4]) < 1e-9);
}

TEST_CASE("commutant of the regular representation has the algebra dimension") {
    auto q = builtin("s3-group");
    const auto comm = commutant_basis(regular_images(q));
    // For the regular representation of a multi-matrix algebra the commutant
    // is isomorphic to the algebra itself: dimension 6.
    CHECK(comm.size() == 6);
}

TEST_CASE("decomposition is deterministic for a fixed seed") {
    auto q = builtin("s3-group");
    const auto d1 = decompose_star_algebra(regular_images(q), 42);
    const auto d2 = decompose_star_algebra(regular_images(q), 42);
    REQUIRE(d1.n_blocks() == d2.n_blocks());
    for (Eigen::Index b = 0; b < d1.n_blocks(); ++b)
        for (size_t u = 0; u < d1.blocks[b].units.size(); ++u)
            CHECK(residual(d1.blocks[b].units[u], d2.blocks[b].units[u]) == 0.0);
}
