#pragma once

#include <optional>

#include "qlie/ltwo.hpp"
#include "qlie/quandle.hpp"

namespace qlie {

struct SetYbeResult {
    bool ok = true;
    std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks the Yang-Baxter equation for B(x,y) = (y, y ⊳ x) pointwise on Q^3.
/// Holds iff (Q, ⊳) is a left shelf.
SetYbeResult shelf_braiding_ybe(const Magma2& Q);

/// Checks for B̄(x,y) = (y ⊲ x, x): the YBE for B̄ (iff right shelf) and
/// mutual inverseness of B and B̄ (iff both inverse laws). The two flags on
/// the right record agreement with the corresponding check_laws entries.
struct InverseBraidingReport {
    SetYbeResult bbar_ybe;
    bool mutually_inverse = true;
    std::optional<std::array<std::size_t, 2>> inverse_witness;
    bool bbar_ybe_matches_right_shelf = true;
    bool inverse_matches_inverse_laws = true;
};

InverseBraidingReport inverse_braiding_checks(const Magma2& Q);

/// Linear Yang-Baxter operator on (k ⊕ V)⊗(k ⊕ V) built from a bracket:
///   B((a,x) ⊗ (b,y)) = (b,y) ⊗ (a,x) + (1,0) ⊗ (0,[x,y]).
/// Basis: u_0 = (1,0), u_i = (0,e_i); tensor index pairs row-major.
struct LinearYB {
    std::size_t n0 = 0;  // dim of the bracket space
    std::size_t N = 0;   // 1 + n0
    std::vector<Rational> c;  // bracket tensor, n0^3
    Matrix B;  // N^2 x N^2

    Vec bracket(std::size_t i, std::size_t j) const;  // [e_i, e_j] in V coords
};

/// From a Lie algebra bracket (need not satisfy Jacobi; antisymmetry of c is
/// required). B is checked invertible on construction.
LinearYB linear_ybe_operator(const LieAlgebra& g);
/// Same, from the degree-0 bracket of an L2Data.
LinearYB linear_ybe_operator(const L2Data& L);

/// B^{-1}((b,y) ⊗ (a,x)) = (a,x) ⊗ (b,y) - (0,[x,y]) ⊗ (1,0): the linear
/// shadow of the inverse braiding pattern.
Matrix linear_braiding_inverse(const LinearYB& B);

struct LinearYbeResult {
    bool ok = true;
    /// Basis index of (k⊕V)^{⊗3} where the two sides first differ.
    std::optional<std::size_t> witness;
};

/// Exact check of (B⊗1)(1⊗B)(B⊗1) = (1⊗B)(B⊗1)(1⊗B). True iff the bracket
/// satisfies the Jacobi identity.
LinearYbeResult linear_ybe_check(const LinearYB& B);

}  // namespace qlie
