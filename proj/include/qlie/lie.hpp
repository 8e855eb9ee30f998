#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlie/matrix.hpp"

namespace qlie {

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis: [e_i, e_j] = sum_k c(i,j,k) e_k. Indices are 0-based.
struct LieAlgebra {
    std::size_t dim = 0;
    std::vector<Rational> c;  // dim^3 entries, index (i*dim + j)*dim + k

    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t n) : dim(n), c(n * n * n) {}

    const Rational& c_at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
    Rational& c_at(std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * dim + j) * dim + k];
    }

    /// [x, y] for coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(std::size_t i, std::size_t j) const;

    bool operator==(const LieAlgebra&) const = default;
};

struct LieReport {
    bool antisymmetric = true;
    bool jacobi = true;
    std::optional<std::array<std::size_t, 2>> antisymmetry_witness;
    std::optional<std::array<std::size_t, 3>> jacobi_witness;
    bool ok() const { return antisymmetric && jacobi; }
};

/// Checks antisymmetry of c and the Jacobi identity on all basis triples.
LieReport validate_lie_algebra(const LieAlgebra& L);

/// Named examples: "abelian:n", "so3", "sl2", "heis3".
/// so3: [e1,e2]=e3 cyclic. sl2 in the basis (h,e,f): [h,e]=2e, [h,f]=-2f,
/// [e,f]=h. heis3: [e1,e2]=e3, rest zero.
LieAlgebra catalog(const std::string& name);

/// K(i,j) = tr(ad(e_i) ad(e_j)).
Matrix killing_form(const LieAlgebra& L);

/// True iff the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& L);

struct Representation {
    LieAlgebra algebra;
    std::size_t dimV = 0;
    std::vector<Matrix> rho;  // one dimV x dimV matrix per basis element

    Vec act(const Vec& x, const Vec& v) const;  // rho(x) v
};

struct RepReport {
    bool valid = true;
    std::optional<std::array<std::size_t, 2>> witness;  // failing basis pair
};

/// Checks rho([e_i,e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i) on all pairs.
RepReport validate_representation(const Representation& R);

Representation adjoint_rep(const LieAlgebra& L);
Representation trivial_rep(const LieAlgebra& L, std::size_t dimV = 1);

}  // namespace qlie
