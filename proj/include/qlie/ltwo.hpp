#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlie/cohomology.hpp"

namespace qlie {

/// 2-term L∞-algebra: complex d : V1 → V0 with a bracket and a trilinear
/// map l3. Tensor index conventions (all 0-based):
///   l2_00(i,j,k):  [e_i, e_j] = Σ_k l2_00(i,j,k) e_k          (V0 x V0 → V0)
///   l2_01(i,p,q):  [e_i, f_p] = Σ_q l2_01(i,p,q) f_q          (V0 x V1 → V1)
///   l3(i,j,k,p):   l3(e_i,e_j,e_k) = Σ_p l3(i,j,k,p) f_p      (V0^3 → V1)
/// [f_p, e_i] is derived as -[e_i, f_p] and [h, k] = 0 for h,k in V1; no
/// tensors are stored for them.
struct L2Data {
    std::size_t n0 = 0, n1 = 0;
    Matrix d;                   // n0 x n1
    std::vector<Rational> l2_00;  // n0^3
    std::vector<Rational> l2_01;  // n0*n1*n1
    std::vector<Rational> l3;     // n0^3 * n1

    L2Data() = default;
    L2Data(std::size_t n0_, std::size_t n1_);

    const Rational& l2_00_at(std::size_t i, std::size_t j, std::size_t k) const {
        return l2_00[(i * n0 + j) * n0 + k];
    }
    Rational& l2_00_at(std::size_t i, std::size_t j, std::size_t k) {
        return l2_00[(i * n0 + j) * n0 + k];
    }
    const Rational& l2_01_at(std::size_t i, std::size_t p, std::size_t q) const {
        return l2_01[(i * n1 + p) * n1 + q];
    }
    Rational& l2_01_at(std::size_t i, std::size_t p, std::size_t q) {
        return l2_01[(i * n1 + p) * n1 + q];
    }
    const Rational& l3_at(std::size_t i, std::size_t j, std::size_t k, std::size_t p) const {
        return l3[((i * n0 + j) * n0 + k) * n1 + p];
    }
    Rational& l3_at(std::size_t i, std::size_t j, std::size_t k, std::size_t p) {
        return l3[((i * n0 + j) * n0 + k) * n1 + p];
    }

    Vec bracket00(const Vec& x, const Vec& y) const;   // V0 x V0 → V0
    Vec bracket01(const Vec& x, const Vec& h) const;   // V0 x V1 → V1
    Vec l3_eval(const Vec& x, const Vec& y, const Vec& z) const;  // → V1
    Vec d_apply(const Vec& h) const;                   // V1 → V0

    /// The Lie algebra on V0 given by l2_00 (need not satisfy Jacobi unless
    /// d = 0).
    LieAlgebra v0_algebra() const;

    bool is_skeletal() const { return d.is_zero(); }
    bool is_strict() const;

    bool operator==(const L2Data&) const = default;
};

/// Status of one of the conditions (a)-(i).
struct ConditionResult {
    bool holds = true;
    std::vector<std::size_t> witness;  // first failing basis tuple, if any
};

struct L2Report {
    // labelled (a)..(i) in order
    std::array<ConditionResult, 9> cond;
    bool ok() const {
        for (const auto& c : cond)
            if (!c.holds) return false;
        return true;
    }
    bool ok_through_h() const {
        for (std::size_t i = 0; i + 1 < cond.size(); ++i)
            if (!cond[i].holds) return false;
        return true;
    }
    static const char* label(std::size_t i) {
        static const char* names[9] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
        return names[i];
    }
};

/// Exhaustive check of the defining conditions (a)-(i) on basis tuples.
/// (b) and (c) hold by the storage convention and are reported as such.
L2Report validate_l2(const L2Data& L);

/// Morphism of the 2-vector space underlying an L2Data, as (source, arrow
/// part): src in V0 coordinates, arrow in V1 coordinates. The target is
/// src + d(arrow).
struct Mor {
    Vec src;
    Vec arrow;
};

Vec mor_target(const L2Data& L, const Mor& f);
Mor mor_identity(const Vec& x, std::size_t n1);
/// Composition by arrow-part addition; requires target(f) = src(g).
Mor mor_compose(const L2Data& L, const Mor& f, const Mor& g);
/// Bracket of morphisms. formula = 1 gives ([x,a],[f,a]+[y,g]); formula = 2
/// gives ([x,a],[x,g]+[f,b]). The two agree when conditions (e),(f) hold.
Mor mor_bracket(const L2Data& L, const Mor& f, const Mor& g, int formula = 1);

struct JacobiatorResult {
    bool holds = true;
    std::optional<std::array<std::size_t, 4>> witness;
};

/// Checks the Jacobiator identity octagon on all basis 4-tuples by composing
/// morphisms; independent of the direct tensor check of condition (i).
JacobiatorResult jacobiator_identity_holds(const L2Data& L);

/// The one-parameter family g_ħ: skeletal, V1 = k (trivial rep), l3 the
/// Killing cocycle scaled by ħ.
L2Data build_ghbar(const LieAlgebra& g, const Rational& hbar);

/// Skeletal L2Data from a quadruple (g, V, ρ, ω) with ω a 3-cocycle.
L2Data from_quadruple(const LieAlgebra& g, const Representation& R, const Cochain& w3);

/// Homomorphism of 2-term L∞-algebras: a chain map (phi0, phi1) plus a
/// skew-symmetric bilinear phi2 : V0 x V0 → V1' stored as a tensor (i,j,q).
struct L2Hom {
    L2Data source, target;
    Matrix phi0;  // target.n0 x source.n0
    Matrix phi1;  // target.n1 x source.n1
    std::vector<Rational> phi2;  // source.n0^2 * target.n1

    const Rational& phi2_at(std::size_t i, std::size_t j, std::size_t q) const {
        return phi2[(i * source.n0 + j) * target.n1 + q];
    }
    Rational& phi2_at(std::size_t i, std::size_t j, std::size_t q) {
        return phi2[(i * source.n0 + j) * target.n1 + q];
    }
    Vec phi2_eval(const Vec& x, const Vec& y) const;  // → target V1
};

struct HomReport {
    bool chain_map = true;
    bool phi2_antisymmetric = true;
    std::array<ConditionResult, 3> cond;  // the three defining equations
    bool ok() const {
        if (!chain_map || !phi2_antisymmetric) return false;
        for (const auto& c : cond)
            if (!c.holds) return false;
        return true;
    }
};

HomReport validate_hom(const L2Hom& F);
L2Hom identity_hom(const L2Data& L);
/// Composite in diagrammatic order: F : U → V then G : V → W.
/// (FG)2(x,y) = G.phi2(F.phi0 x, F.phi0 y) + G.phi1(F.phi2(x,y)).
L2Hom compose_hom(const L2Hom& F, const L2Hom& G);

/// 2-homomorphism between homs with equal endpoints: a chain homotopy
/// tau : V0 → V1' with d'·tau = psi0 - phi0 and tau·d = psi1 - phi1.
struct L2TwoHom {
    L2Hom source, target;
    Matrix tau;  // target-of-homs n1' x source-of-homs n0
};

struct TwoHomReport {
    bool homotopy = true;
    ConditionResult bracket_condition;  // phi2 + tau[x,y] = [tau x, tau y] + psi2
    bool ok() const { return homotopy && bracket_condition.holds; }
};

TwoHomReport validate_two_hom(const L2TwoHom& T);
L2TwoHom identity_two_hom(const L2Hom& F);
L2TwoHom vcompose(const L2TwoHom& T1, const L2TwoHom& T2);
L2TwoHom hcompose(const L2TwoHom& T1, const L2TwoHom& T2);

/// 2-vector space: object space k^o, morphism space k^m with linear source,
/// target and identity-assigning maps satisfying s i = t i = id.
struct TwoVect {
    std::size_t o = 0, m = 0;
    Matrix s, t, i;  // s,t: o x m; i: m x o
};

TwoVect to_two_vect(const L2Data& L);

/// The 2-term-complex part extracted from a 2-vector space (brackets zero).
L2Data from_two_vect(const TwoVect& W);

/// Invertible pair (P0, P1) realizing the isomorphism
/// W → to_two_vect(from_two_vect(W)).
struct TwoVectIso {
    Matrix P0, P1;
};
TwoVectIso two_vect_roundtrip_iso(const TwoVect& W);

/// Result of collapsing a Lie 2-algebra onto a skeletal model (d = 0):
/// fwd : L → skeletal, bwd : skeletal → L, plus the 2-homomorphisms
/// connecting both composites to identities.
struct Skeletonization {
    L2Data skeletal;
    L2Hom fwd, bwd;
    L2TwoHom fwd_bwd_to_id;  // compose(fwd,bwd) ⇒ 1_L
    L2TwoHom bwd_fwd_to_id;  // compose(bwd,fwd) ⇒ 1_skeletal
};

Skeletonization skeletonize(const L2Data& L);

/// For skeletal L2Data sharing (n0, n1, l2_00, l2_01): equivalent iff the two
/// l3 cocycles are cohomologous for the induced (g, V, ρ).
bool equivalent_skeletal(const L2Data& L1, const L2Data& L2);

/// The representation of the V0 Lie algebra on V1 read off from l2_01.
Representation induced_rep(const L2Data& L);

/// l3 as a degree-3 cochain with values in the induced representation.
Cochain l3_cochain(const L2Data& L);

}  // namespace qlie
