#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/lie.hpp"

namespace qlie {

/// PBW monomial: exponent of each generator, e1^a1 e2^a2 ... in the input
/// basis order.
using Mono = std::vector<unsigned>;

unsigned mono_degree(const Mono& m);

/// Element of the degree-truncated universal enveloping algebra U(g)≤D in
/// the PBW basis. Zero coefficients are never stored.
struct EnvElement {
    LieAlgebra algebra;
    unsigned cap = 3;
    std::map<Mono, Rational> terms;

    unsigned degree() const;  // max term degree, 0 for the zero element
    bool is_zero() const { return terms.empty(); }
    bool operator==(const EnvElement& other) const { return terms == other.terms; }
};

/// Element of U(g)≤D ⊗ U(g)≤D (coproduct values live here).
struct EnvTensor {
    LieAlgebra algebra;
    unsigned cap = 3;
    std::map<std::pair<Mono, Mono>, Rational> terms;
};

EnvElement env_zero(const LieAlgebra& g, unsigned cap);
EnvElement env_one(const LieAlgebra& g, unsigned cap);
EnvElement env_generator(const LieAlgebra& g, unsigned cap, std::size_t i);
EnvElement env_scale(const Rational& c, EnvElement x);
EnvElement env_add(EnvElement x, const EnvElement& y);
EnvElement env_sub(EnvElement x, const EnvElement& y);

/// Product straightened into the PBW basis with e_j e_i = e_i e_j - [e_i,e_j]
/// for i < j, applied recursively. Straightening only lowers degree, so
/// in-cap products are exact; degree overflow throws CapExceeded.
EnvElement pbw_multiply(const EnvElement& x, const EnvElement& y);

/// Δ, multiplicative on PBW monomials: Δ(e_i) = e_i⊗1 + 1⊗e_i gives
/// Δ(mono a) = Σ_{0≤b≤a} Π C(a_i,b_i) (mono b)⊗(mono a-b).
EnvTensor coproduct(const EnvElement& x);

/// ε(1) = 1, zero on positive-degree monomials.
Rational counit(const EnvElement& x);

/// S(e_i) = -e_i extended anti-multiplicatively, then straightened.
EnvElement antipode(const EnvElement& x);

/// The spindle operation x ⊳ y = Σ x₍₁₎ · y · S(x₍₂₎).
EnvElement conjugate(const EnvElement& x, const EnvElement& y);

struct EnvLawResult {
    bool holds = true;
    std::vector<Mono> witness;  // monomial arguments of the first failure
};

struct SpindleReport {
    EnvLawResult unital_left;    // 1 ⊳ x = x
    EnvLawResult unital_right;   // x ⊳ 1 = ε(x)·1
    EnvLawResult distributive;   // x ⊳ (y ⊳ z) = Σ (x₍₁₎ ⊳ y) ⊳ (x₍₂₎ ⊳ z)
    EnvLawResult idempotent;     // Σ x₍₁₎ ⊳ x₍₂₎ = x
    std::size_t checked = 0;
    std::size_t skipped = 0;  // degree-infeasible argument tuples
    bool ok() const {
        return unital_left.holds && unital_right.holds && distributive.holds &&
               idempotent.holds;
    }
};

/// Checks the unital-spindle laws on all PBW basis monomials whose degrees
/// keep every intermediate product within the cap.
SpindleReport spindle_axioms_check(const LieAlgebra& g, unsigned D);

/// Reads structure constants back from the degree-1 part of e_i ⊳ e_j and
/// asserts they equal g's exactly, along with e_i ⊳ e_i = 0 and the
/// derivation identity on basis triples. Throws TheoremViolation on any
/// mismatch (which cannot happen for valid g).
LieAlgebra recover_bracket(const LieAlgebra& g, unsigned D = 3);

/// "q * e1^a1 e2^a2 ..." term list, sorted by degree then lexicographically.
std::string format_env(const EnvElement& x);

}  // namespace qlie
