#pragma once

#include <map>
#include <vector>

#include "qlie/lie.hpp"

namespace qlie {

/// Degree-n antisymmetric multilinear map g^(⊗n) → V, stored only on strictly
/// increasing basis index tuples. Evaluation at arbitrary tuples extends by
/// full antisymmetry (zero on repeated indices).
struct Cochain {
    LieAlgebra algebra;
    Representation rep;
    std::size_t degree = 0;
    std::map<std::vector<std::size_t>, Vec> values;

    bool is_zero() const;
    bool operator==(const Cochain&) const;
};

Cochain zero_cochain(const LieAlgebra& L, const Representation& R, std::size_t degree);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);

/// Antisymmetric evaluation at an arbitrary index tuple.
Vec eval_cochain(const Cochain& w, std::vector<std::size_t> indices);

/// Chevalley-Eilenberg coboundary:
///   (δω)(v_1..v_{n+1}) = Σ_i (-1)^{i+1} ρ(v_i) ω(.. v̂_i ..)
///                      + Σ_{j<k} (-1)^{j+k} ω([v_j,v_k], .. v̂_j .. v̂_k ..).
/// For a 0-cochain f: (δf)(v) = ρ(v) f.
Cochain coboundary(const Cochain& w);

/// All strictly increasing n-tuples over [0, dim), in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, std::size_t n);

/// Matrix of δ : C^n → C^{n+1} in the increasing-tuple ⊗ V basis. A tuple
/// basis index t and vector index a flatten to t*dimV + a.
Matrix coboundary_matrix(const LieAlgebra& L, const Representation& R, std::size_t n);

/// Coordinates of a cochain in the increasing-tuple basis used by
/// coboundary_matrix, and back.
Vec cochain_coordinates(const Cochain& w);
Cochain cochain_from_coordinates(const LieAlgebra& L, const Representation& R,
                                 std::size_t degree, const Vec& coords);

struct CohomologyDims {
    std::size_t dimZ = 0;
    std::size_t dimB = 0;
    std::size_t dimH = 0;
};

/// dimZ = nullity of δ_n, dimB = rank of δ_{n-1}, dimH = dimZ - dimB.
CohomologyDims cohomology_dims(const LieAlgebra& L, const Representation& R, std::size_t n);

bool is_cocycle(const Cochain& w);
bool is_coboundary(const Cochain& w);
bool cohomologous(const Cochain& w1, const Cochain& w2);

/// Degree-3 cochain l3(x,y,z) = ħ ⟨x, [y,z]⟩ with values in the trivial
/// one-dimensional representation. Closed for every valid L.
Cochain killing_cocycle(const LieAlgebra& L, const Rational& hbar);

}  // namespace qlie
