#include "qlie/zam.hpp"

#include <algorithm>

namespace qlie {

namespace {

Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

}  // namespace

L2Data build_lprime(const L2Data& L) {
    L2Report rep = validate_l2(L);
    if (!rep.ok_through_h()) throw NotAnL2("build_lprime needs conditions (a)-(h)");
    L2Data P(L.n0 + 1, L.n1);
    for (std::size_t r = 0; r < L.n0; ++r)
        for (std::size_t p = 0; p < L.n1; ++p) P.d.at(r + 1, p) = L.d.at(r, p);
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t j = 0; j < L.n0; ++j)
            for (std::size_t k = 0; k < L.n0; ++k)
                P.l2_00_at(i + 1, j + 1, k + 1) = L.l2_00_at(i, j, k);
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t p = 0; p < L.n1; ++p)
            for (std::size_t q = 0; q < L.n1; ++q) P.l2_01_at(i + 1, p, q) = L.l2_01_at(i, p, q);
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t j = 0; j < L.n0; ++j)
            for (std::size_t k = 0; k < L.n0; ++k)
                for (std::size_t p = 0; p < L.n1; ++p)
                    P.l3_at(i + 1, j + 1, k + 1, p) = L.l3_at(i, j, k, p);
    return P;
}

void sparse_canonicalize(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [k, c] : v) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& e) { return e.second == 0; }),
              out.end());
    v = std::move(out);
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    out.insert(out.end(), b.begin(), b.end());
    sparse_canonicalize(out);
    return out;
}

Rational sparse_at(const SparseVec& v, std::size_t key) {
    for (const auto& [k, c] : v)
        if (k == key) return c;
    return 0;
}

LPrimeTensor::LPrimeTensor(const L2Data& base)
    : base_(base), lp_(build_lprime(base)), N_(lp_.n0) {}

std::size_t LPrimeTensor::codes(std::size_t m) const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= N_;
    return total;
}

SparseVec LPrimeTensor::apply_B(const SparseVec& v, std::size_t pos, std::size_t m) const {
    const std::size_t N = N_;
    std::size_t strideLo = 1;
    for (std::size_t i = pos + 2; i < m; ++i) strideLo *= N;
    const std::size_t strideHi = strideLo * N;
    SparseVec out;
    out.reserve(v.size() * 2);
    for (const auto& [idx, coeff] : v) {
        std::size_t b = (idx / strideLo) % N;
        std::size_t a = (idx / strideHi) % N;
        std::size_t rest = idx - a * strideHi - b * strideLo;
        out.emplace_back(rest + b * strideHi + a * strideLo, coeff);
        if (a > 0 && b > 0)
            for (std::size_t k = 0; k + 1 < N; ++k) {
                const Rational& br = lp_.l2_00_at(a, b, k + 1);
                if (br != 0) out.emplace_back(rest + (k + 1) * strideLo, coeff * br);
            }
    }
    sparse_canonicalize(out);
    return out;
}

SparseVec LPrimeTensor::apply_word(SparseVec v, const std::vector<std::size_t>& word,
                                   std::size_t m) const {
    for (auto pos : word) v = apply_B(v, pos, m);
    return v;
}

TensorMor LPrimeTensor::identity_mor(SparseVec obj, std::size_t m) const {
    TensorMor f;
    f.m = m;
    f.N = N_;
    f.n1 = base_.n1;
    f.src = std::move(obj);
    f.arrows.assign(m, SparseVec{});
    return f;
}

SparseVec LPrimeTensor::target(const TensorMor& f) const {
    SparseVec t = f.src;
    const std::size_t n1 = base_.n1;
    for (std::size_t slot = 0; slot < f.m; ++slot) {
        std::size_t stride = 1;
        for (std::size_t i = slot + 1; i < f.m; ++i) stride *= N_;
        for (const auto& [key, coeff] : f.arrows[slot]) {
            std::size_t code = key / n1, p = key % n1;
            for (std::size_t r = 0; r < N_; ++r) {
                const Rational& dr = lp_.d.at(r, p);
                if (dr != 0) t.emplace_back(code + r * stride, coeff * dr);
            }
        }
    }
    sparse_canonicalize(t);
    return t;
}

TensorMor LPrimeTensor::compose(const TensorMor& f, const TensorMor& g) const {
    if (!(target(f) == g.src))
        throw InternalInconsistency("vertical composite is not composable");
    TensorMor h = f;
    for (std::size_t slot = 0; slot < f.m; ++slot)
        h.arrows[slot] = sparse_add(h.arrows[slot], g.arrows[slot]);
    return h;
}

TensorMor LPrimeTensor::apply_B_mor(const TensorMor& f, std::size_t pos) const {
    const std::size_t m = f.m;
    const std::size_t N = N_;
    const std::size_t n1 = base_.n1;
    std::size_t strideLo = 1;
    for (std::size_t i = pos + 2; i < m; ++i) strideLo *= N;
    const std::size_t strideHi = strideLo * N;

    TensorMor out;
    out.m = m;
    out.N = N;
    out.n1 = n1;
    out.src = apply_B(f.src, pos, m);
    out.arrows.assign(m, SparseVec{});

    for (std::size_t slot = 0; slot < m; ++slot) {
        for (const auto& [key, coeff] : f.arrows[slot]) {
            std::size_t code = key / n1, p = key % n1;
            if (slot != pos && slot != pos + 1) {
                // B acts on two object slots of this arrow tensor
                std::size_t b = (code / strideLo) % N;
                std::size_t a = (code / strideHi) % N;
                std::size_t rest = code - a * strideHi - b * strideLo;
                out.arrows[slot].emplace_back((rest + b * strideHi + a * strideLo) * n1 + p,
                                              coeff);
                if (a > 0 && b > 0)
                    for (std::size_t k = 0; k + 1 < N; ++k) {
                        const Rational& br = lp_.l2_00_at(a, b, k + 1);
                        if (br != 0)
                            out.arrows[slot].emplace_back((rest + (k + 1) * strideLo) * n1 + p,
                                                          coeff * br);
                    }
            } else if (slot == pos) {
                // f_p ⊗ i(u_b) ↦ i(u_b) ⊗ f_p + i(u_0) ⊗ [f_p, u_b]
                std::size_t b = (code / strideLo) % N;
                std::size_t rest = code - b * strideLo;
                out.arrows[pos + 1].emplace_back((rest + b * strideHi) * n1 + p, coeff);
                if (b > 0)
                    for (std::size_t q = 0; q < n1; ++q) {
                        const Rational& br = lp_.l2_01_at(b, p, q);
                        if (br != 0) out.arrows[pos + 1].emplace_back(rest * n1 + q, -coeff * br);
                    }
            } else {
                // i(u_a) ⊗ f_p ↦ f_p ⊗ i(u_a) + i(u_0) ⊗ [u_a, f_p]
                std::size_t a = (code / strideHi) % N;
                std::size_t rest = code - a * strideHi;
                out.arrows[pos].emplace_back((rest + a * strideLo) * n1 + p, coeff);
                if (a > 0)
                    for (std::size_t q = 0; q < n1; ++q) {
                        const Rational& br = lp_.l2_01_at(a, p, q);
                        if (br != 0) out.arrows[pos + 1].emplace_back(rest * n1 + q, coeff * br);
                    }
            }
        }
    }
    for (auto& a : out.arrows) sparse_canonicalize(a);
    return out;
}

TensorMor LPrimeTensor::apply_word_mor(TensorMor f, const std::vector<std::size_t>& word) const {
    for (auto pos : word) f = apply_B_mor(f, pos);
    return f;
}

NatTrans zam_Y(const L2Data& L) {
    LPrimeTensor ops(L);
    const std::size_t N = ops.N();
    const std::size_t n1 = ops.n1();
    const std::size_t total = N * N * N;

    NatTrans Y;
    Y.domain_word = {0, 1, 0};
    Y.codomain_word = {1, 0, 1};

    auto build = [&](int eps) {
        std::vector<TensorMor> vals;
        vals.reserve(total);
        for (std::size_t code = 0; code < total; ++code) {
            SparseVec obj{{code, Rational(1)}};
            TensorMor mor = ops.identity_mor(ops.apply_word(obj, Y.domain_word, 3), 3);
            std::size_t a = code / (N * N), b = (code / N) % N, c = code % N;
            if (a > 0 && b > 0 && c > 0) {
                Vec arrow = L.l3_eval(unit_vec(L.n0, c - 1), unit_vec(L.n0, b - 1),
                                      unit_vec(L.n0, a - 1));
                for (std::size_t p = 0; p < n1; ++p)
                    if (arrow[p] != 0)
                        mor.arrows[2].emplace_back(0 * n1 + p, Rational(eps) * arrow[p]);
            }
            vals.push_back(std::move(mor));
        }
        return vals;
    };
    auto satisfies_targets = [&](const std::vector<TensorMor>& vals) {
        for (std::size_t code = 0; code < total; ++code) {
            SparseVec obj{{code, Rational(1)}};
            if (!(ops.target(vals[code]) == ops.apply_word(obj, Y.codomain_word, 3)))
                return false;
        }
        return true;
    };

    auto plus = build(+1);
    bool plus_ok = satisfies_targets(plus);
    auto minus = build(-1);
    bool minus_ok = satisfies_targets(minus);
    if (plus_ok) {
        Y.values = std::move(plus);
        Y.epsilon = 1;
        Y.sign_ambiguous = minus_ok;
    } else if (minus_ok) {
        Y.values = std::move(minus);
        Y.epsilon = -1;
    } else {
        throw ConstructionFailure("no sign makes Y respect its target functor");
    }
    return Y;
}

namespace {

/// One tetrahedron factor: evaluate Y (placed on slots 1-3 or 2-4 of the
/// 4-fold tensor) at the image of the object under `pre`, then push the
/// component through `post`.
struct Factor {
    std::vector<std::size_t> pre;
    std::vector<std::size_t> post;
};

std::vector<std::size_t> shift_word(const std::vector<std::size_t>& w, std::size_t offset) {
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (auto p : w) out.push_back(p + offset);
    return out;
}

/// Y's component at an arbitrary object vector, by linear extension.
TensorMor y_at(const LPrimeTensor& ops, const NatTrans& Y, int placement,
               const SparseVec& obj4) {
    const std::size_t N = ops.N();
    const std::size_t n1 = ops.n1();
    TensorMor out = ops.identity_mor(ops.apply_word(obj4, shift_word(Y.domain_word, placement), 4),
                                     4);
    const std::size_t arrowSlot = placement + 2;  // Y writes into its third slot
    for (const auto& [code, coeff] : obj4) {
        std::size_t d0 = code / (N * N * N);
        std::size_t rest3 = code % (N * N * N);
        std::size_t ycode, bystander;
        if (placement == 0) {
            ycode = code / N;
            bystander = code % N;
        } else {
            ycode = rest3;
            bystander = d0;
        }
        const TensorMor& comp = Y.values[ycode];
        for (const auto& [key, val] : comp.arrows[2]) {
            std::size_t p = key % n1;  // comp's arrow sits at object code 0
            std::size_t code4 = placement == 0 ? bystander : bystander * N * N * N;
            out.arrows[arrowSlot].emplace_back(code4 * n1 + p, coeff * val);
        }
    }
    sparse_canonicalize(out.arrows[arrowSlot]);
    return out;
}

TensorMor eval_factor(const LPrimeTensor& ops, const NatTrans& Y, const Factor& f,
                      int placement, const SparseVec& obj4) {
    return ops.apply_word_mor(y_at(ops, Y, placement, ops.apply_word(obj4, f.pre, 4)), f.post);
}

/// Columns of the object-level source / target functor of a factor.
std::vector<SparseVec> factor_columns(const LPrimeTensor& ops, const Factor& f, int placement,
                                      const std::vector<std::size_t>& word) {
    const std::size_t total = ops.codes(4);
    std::vector<SparseVec> cols;
    cols.reserve(total);
    for (std::size_t c = 0; c < total; ++c) {
        SparseVec v{{c, Rational(1)}};
        v = ops.apply_word(std::move(v), f.pre, 4);
        v = ops.apply_word(std::move(v), shift_word(word, placement), 4);
        v = ops.apply_word(std::move(v), f.post, 4);
        cols.push_back(std::move(v));
    }
    return cols;
}

/// Resolve the Y placement (Y⊗1 vs 1⊗Y) of each factor: consecutive factors
/// must be composable as functors, which pins the choice.
std::vector<int> resolve_placements(const LPrimeTensor& ops, const NatTrans& Y,
                                    const std::vector<Factor>& side) {
    std::vector<std::array<std::vector<SparseVec>, 2>> src(4), tgt(4);
    for (std::size_t k = 0; k < 4; ++k)
        for (int pl = 0; pl < 2; ++pl) {
            src[k][pl] = factor_columns(ops, side[k], pl, Y.domain_word);
            tgt[k][pl] = factor_columns(ops, side[k], pl, Y.codomain_word);
        }
    for (std::size_t trial = 0; trial < 16; ++trial) {
        std::vector<int> placement(4);
        for (std::size_t k = 0; k < 4; ++k) placement[k] = int((trial >> k) & 1);
        bool ok = true;
        for (std::size_t k = 0; k + 1 < 4 && ok; ++k)
            ok = tgt[k][placement[k]] == src[k + 1][placement[k + 1]];
        if (ok) return placement;
    }
    throw InternalInconsistency("no Y placement makes one tetrahedron side composable");
}

Vec concat_arrows(const LPrimeTensor& ops, const TensorMor& f) {
    const std::size_t block = ops.codes(f.m) * f.n1;
    Vec out(f.m * block);
    for (std::size_t slot = 0; slot < f.m; ++slot)
        for (const auto& [key, c] : f.arrows[slot]) out[slot * block + key] = c;
    return out;
}

bool arrows_equal(const TensorMor& a, const TensorMor& b) {
    for (std::size_t slot = 0; slot < a.m; ++slot)
        if (!(a.arrows[slot] == b.arrows[slot])) return false;
    return true;
}

}  // namespace

ZamResult zam_check(const L2Data& L) {
    NatTrans Y = zam_Y(L);
    LPrimeTensor ops(L);
    const std::size_t total = ops.codes(4);

    // Factors of each side of the tetrahedron equation, in vertical order
    // (first factor applied first); pre/post words in application order.
    const std::vector<Factor> lhs = {
        {{}, {2, 1, 0}},
        {{1, 0}, {0}},
        {{1, 2}, {2}},
        {{0, 1, 2}, {}},
    };
    const std::vector<Factor> rhs = {
        {{0, 1, 2}, {}},
        {{0}, {0, 1}},
        {{2}, {2, 1}},
        {{2, 1, 0}, {}},
    };

    std::vector<int> lp = resolve_placements(ops, Y, lhs);
    std::vector<int> rp = resolve_placements(ops, Y, rhs);

    // Both sides must be parallel 2-morphisms.
    {
        auto ls = factor_columns(ops, lhs[0], lp[0], Y.domain_word);
        auto rs = factor_columns(ops, rhs[0], rp[0], Y.domain_word);
        auto lt = factor_columns(ops, lhs[3], lp[3], Y.codomain_word);
        auto rt = factor_columns(ops, rhs[3], rp[3], Y.codomain_word);
        if (!(ls == rs) || !(lt == rt))
            throw InternalInconsistency("tetrahedron sides are not parallel");
    }

    ZamResult res;
    res.epsilon = Y.epsilon;
    res.sign_ambiguous = Y.sign_ambiguous;
    res.objects_checked = total;
    for (std::size_t code = 0; code < total; ++code) {
        SparseVec obj{{code, Rational(1)}};
        TensorMor lcomp = eval_factor(ops, Y, lhs[0], lp[0], obj);
        for (std::size_t k = 1; k < 4; ++k)
            lcomp = ops.compose(lcomp, eval_factor(ops, Y, lhs[k], lp[k], obj));
        TensorMor rcomp = eval_factor(ops, Y, rhs[0], rp[0], obj);
        for (std::size_t k = 1; k < 4; ++k)
            rcomp = ops.compose(rcomp, eval_factor(ops, Y, rhs[k], rp[k], obj));
        if (!(lcomp.src == rcomp.src))
            throw InternalInconsistency("tetrahedron sides start at different objects");
        if (!arrows_equal(lcomp, rcomp)) {
            res.ok = false;
            ZamWitness w;
            const std::size_t N = ops.N();
            w.object = {code / (N * N * N), (code / (N * N)) % N, (code / N) % N, code % N};
            w.lhs_arrow = concat_arrows(ops, lcomp);
            w.rhs_arrow = concat_arrows(ops, rcomp);
            res.witness = std::move(w);
            return res;
        }
    }
    return res;
}

}  // namespace qlie
