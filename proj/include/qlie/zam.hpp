#pragma once

#include <optional>
#include <vector>

#include "qlie/ltwo.hpp"
#include "qlie/ybe.hpp"

namespace qlie {

/// L' = K ⊕ L: object index 0 is the categorified-ground-field slot, indices
/// 1..n0 the V0 slots; arrows are the V1 of L. d, l2 and l3 extend by zero on
/// the K slot.
L2Data build_lprime(const L2Data& L);

/// Sparse coordinate vector: sorted (index, coefficient) pairs, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

void sparse_canonicalize(SparseVec& v);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
Rational sparse_at(const SparseVec& v, std::size_t key);

/// Morphism of L'^(⊗m) in (source, arrow-parts) form. src is over the N^m
/// object basis (slot 0 the most significant digit). arrows[slot] holds
/// coefficients of basis arrow tensors u_{a_0} ⊗ .. ⊗ f_p(slot) ⊗ .., keyed
/// by obj_code * n1 + p with the slot's own digit held at 0. Arrow parts in
/// two slots at once never arise in the composites built here.
struct TensorMor {
    std::size_t m = 0, N = 0, n1 = 0;
    SparseVec src;
    std::vector<SparseVec> arrows;

    bool arrows_zero() const {
        for (const auto& a : arrows)
            if (!a.empty()) return false;
        return true;
    }
};

/// Sparse actions of the braiding B and morphism bookkeeping for L'^(⊗m).
/// All functors in scope are words in "B at slot pair (pos, pos+1)".
class LPrimeTensor {
public:
    explicit LPrimeTensor(const L2Data& base);

    const L2Data& lprime() const { return lp_; }
    std::size_t N() const { return N_; }
    std::size_t n1() const { return base_.n1; }
    const L2Data& base() const { return base_; }

    SparseVec apply_B(const SparseVec& v, std::size_t pos, std::size_t m) const;
    SparseVec apply_word(SparseVec v, const std::vector<std::size_t>& word, std::size_t m) const;

    TensorMor apply_B_mor(const TensorMor& f, std::size_t pos) const;
    TensorMor apply_word_mor(TensorMor f, const std::vector<std::size_t>& word) const;

    TensorMor identity_mor(SparseVec obj, std::size_t m) const;
    SparseVec target(const TensorMor& f) const;
    /// Vertical composition; throws InternalInconsistency unless
    /// target(f) = src(g) exactly.
    TensorMor compose(const TensorMor& f, const TensorMor& g) const;

    std::size_t codes(std::size_t m) const;

private:
    L2Data base_;
    L2Data lp_;
    std::size_t N_;
};

/// The Yang-Baxterator Y : (B⊗1)(1⊗B)(B⊗1) ⇒ (1⊗B)(B⊗1)(1⊗B) on L'^(⊗3),
/// stored by its components at basis objects and extended linearly. The
/// arrow part at u_a ⊗ u_b ⊗ u_c is ε · u_0 ⊗ u_0 ⊗ l3(x_c, x_b, x_a) in the
/// third slot; ε is fixed by the source/target constraint.
struct NatTrans {
    std::vector<std::size_t> domain_word;  // B positions, applied in order
    std::vector<std::size_t> codomain_word;
    std::vector<TensorMor> values;  // one per basis object of L'^(⊗3)
    int epsilon = 1;
    bool sign_ambiguous = false;
};

NatTrans zam_Y(const L2Data& L);

struct ZamWitness {
    std::vector<std::size_t> object;  // basis digits of L'^(⊗4)
    Vec lhs_arrow, rhs_arrow;         // concatenated slot-major arrow parts
};

struct ZamResult {
    bool ok = true;
    std::size_t objects_checked = 0;
    std::optional<ZamWitness> witness;
    int epsilon = 1;
    bool sign_ambiguous = false;
};

/// Verifies the Zamolodchikov tetrahedron equation for Y on all basis
/// objects of L'^(⊗4). Equivalent to the Jacobiator identity for l3.
ZamResult zam_check(const L2Data& L);

}  // namespace qlie
