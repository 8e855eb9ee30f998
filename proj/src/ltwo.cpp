#include "qlie/ltwo.hpp"

#include <algorithm>

namespace qlie {

namespace {

Vec unit(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

/// Bracket of two degree-1 elements. Identically zero (condition (c)); kept
/// as a function so the terms that mention it match the defining equations.
Vec bracket11(const L2Data& L, const Vec&, const Vec&) { return Vec(L.n1); }

}  // namespace

L2Data::L2Data(std::size_t n0_, std::size_t n1_)
    : n0(n0_),
      n1(n1_),
      d(Matrix::zero(n0_, n1_)),
      l2_00(n0_ * n0_ * n0_),
      l2_01(n0_ * n1_ * n1_),
      l3(n0_ * n0_ * n0_ * n1_) {}

Vec L2Data::bracket00(const Vec& x, const Vec& y) const {
    if (x.size() != n0 || y.size() != n0) throw InvalidShape("bracket00: bad vector length");
    Vec r(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n0; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n0; ++k) {
                const Rational& c = l2_00_at(i, j, k);
                if (c != 0) r[k] += f * c;
            }
        }
    }
    return r;
}

Vec L2Data::bracket01(const Vec& x, const Vec& h) const {
    if (x.size() != n0 || h.size() != n1) throw InvalidShape("bracket01: bad vector length");
    Vec r(n1);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t p = 0; p < n1; ++p) {
            if (h[p] == 0) continue;
            Rational f = x[i] * h[p];
            for (std::size_t q = 0; q < n1; ++q) {
                const Rational& c = l2_01_at(i, p, q);
                if (c != 0) r[q] += f * c;
            }
        }
    }
    return r;
}

Vec L2Data::l3_eval(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != n0 || y.size() != n0 || z.size() != n0)
        throw InvalidShape("l3_eval: bad vector length");
    Vec r(n1);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n0; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n0; ++k) {
                if (z[k] == 0) continue;
                Rational g = f * z[k];
                for (std::size_t p = 0; p < n1; ++p) {
                    const Rational& c = l3_at(i, j, k, p);
                    if (c != 0) r[p] += g * c;
                }
            }
        }
    }
    return r;
}

Vec L2Data::d_apply(const Vec& h) const { return d.apply(h); }

LieAlgebra L2Data::v0_algebra() const {
    LieAlgebra g(n0);
    g.c = l2_00;
    return g;
}

bool L2Data::is_strict() const {
    for (const auto& x : l3)
        if (x != 0) return false;
    return true;
}

L2Report validate_l2(const L2Data& L) {
    const std::size_t n0 = L.n0, n1 = L.n1;
    if (L.d.rows() != n0 || L.d.cols() != n1 || L.l2_00.size() != n0 * n0 * n0 ||
        L.l2_01.size() != n0 * n1 * n1 || L.l3.size() != n0 * n0 * n0 * n1)
        throw InvalidShape("L2Data tensors have inconsistent shapes");
    L2Report rep;

    // (a) antisymmetry of the V0 bracket
    for (std::size_t i = 0; i < n0 && rep.cond[0].holds; ++i)
        for (std::size_t j = 0; j < n0 && rep.cond[0].holds; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                if (L.l2_00_at(i, j, k) != -L.l2_00_at(j, i, k)) {
                    rep.cond[0] = {false, {i, j}};
                    break;
                }

    // (b) [x,h] = -[h,x] and (c) [h,k] = 0 hold by the storage convention:
    // no tensor exists for either derived bracket.

    // (d) total antisymmetry of l3 in its three V0 slots
    for (std::size_t i = 0; i < n0 && rep.cond[3].holds; ++i)
        for (std::size_t j = 0; j < n0 && rep.cond[3].holds; ++j)
            for (std::size_t k = 0; k < n0 && rep.cond[3].holds; ++k)
                for (std::size_t p = 0; p < n1; ++p)
                    if (L.l3_at(i, j, k, p) != -L.l3_at(j, i, k, p) ||
                        L.l3_at(i, j, k, p) != -L.l3_at(i, k, j, p)) {
                        rep.cond[3] = {false, {i, j, k}};
                        break;
                    }

    // (e) d([x,h]) = [x,dh]
    for (std::size_t i = 0; i < n0 && rep.cond[4].holds; ++i)
        for (std::size_t p = 0; p < n1; ++p) {
            Vec lhs = L.d_apply(L.bracket01(unit(n0, i), unit(n1, p)));
            Vec rhs = L.bracket00(unit(n0, i), L.d.column(p));
            if (!(lhs == rhs)) {
                rep.cond[4] = {false, {i, p}};
                break;
            }
        }

    // (f) [dh,k] = [h,dk]
    for (std::size_t p = 0; p < n1 && rep.cond[5].holds; ++p)
        for (std::size_t q = 0; q < n1; ++q) {
            Vec lhs = L.bracket01(L.d.column(p), unit(n1, q));
            Vec rhs = -L.bracket01(L.d.column(q), unit(n1, p));
            if (!(lhs == rhs)) {
                rep.cond[5] = {false, {p, q}};
                break;
            }
        }

    // (g) d(l3(x,y,z)) = -[[x,y],z] + [[x,z],y] + [x,[y,z]]
    for (std::size_t i = 0; i < n0 && rep.cond[6].holds; ++i)
        for (std::size_t j = 0; j < n0 && rep.cond[6].holds; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                Vec ei = unit(n0, i), ej = unit(n0, j), ek = unit(n0, k);
                Vec lhs = L.d_apply(L.l3_eval(ei, ej, ek));
                Vec rhs = -L.bracket00(L.bracket00(ei, ej), ek) +
                          L.bracket00(L.bracket00(ei, ek), ej) +
                          L.bracket00(ei, L.bracket00(ej, ek));
                if (!(lhs == rhs)) {
                    rep.cond[6] = {false, {i, j, k}};
                    break;
                }
            }

    // (h) l3(dh,x,y) = -[[x,y],h] + [[x,h],y] + [x,[y,h]]
    for (std::size_t p = 0; p < n1 && rep.cond[7].holds; ++p)
        for (std::size_t i = 0; i < n0 && rep.cond[7].holds; ++i)
            for (std::size_t j = 0; j < n0; ++j) {
                Vec ei = unit(n0, i), ej = unit(n0, j), fp = unit(n1, p);
                Vec lhs = L.l3_eval(L.d.column(p), ei, ej);
                // [v,h] = -[h,v] for v in V0; [[x,h],y] = -[y,[x,h]]
                Vec rhs = -L.bracket01(L.bracket00(ei, ej), fp) -
                          L.bracket01(ej, L.bracket01(ei, fp)) +
                          L.bracket01(ei, L.bracket01(ej, fp));
                if (!(lhs == rhs)) {
                    rep.cond[7] = {false, {p, i, j}};
                    break;
                }
            }

    // (i) the coherence law for l3
    for (std::size_t w = 0; w < n0 && rep.cond[8].holds; ++w)
        for (std::size_t x = 0; x < n0 && rep.cond[8].holds; ++x)
            for (std::size_t y = 0; y < n0 && rep.cond[8].holds; ++y)
                for (std::size_t z = 0; z < n0; ++z) {
                    Vec ew = unit(n0, w), ex = unit(n0, x), ey = unit(n0, y), ez = unit(n0, z);
                    // [l3(...), v] = -[v, l3(...)]
                    Vec lhs = -L.bracket01(ez, L.l3_eval(ew, ex, ey)) -
                              L.bracket01(ex, L.l3_eval(ew, ey, ez)) +
                              L.l3_eval(L.bracket00(ew, ey), ex, ez) +
                              L.l3_eval(L.bracket00(ex, ez), ew, ey);
                    Vec rhs = -L.bracket01(ey, L.l3_eval(ew, ex, ez)) -
                              L.bracket01(ew, L.l3_eval(ex, ey, ez)) +
                              L.l3_eval(L.bracket00(ew, ex), ey, ez) +
                              L.l3_eval(L.bracket00(ew, ez), ex, ey) +
                              L.l3_eval(L.bracket00(ex, ey), ew, ez) +
                              L.l3_eval(L.bracket00(ey, ez), ew, ex);
                    if (!(lhs == rhs)) {
                        rep.cond[8] = {false, {w, x, y, z}};
                        break;
                    }
                }

    return rep;
}

Vec mor_target(const L2Data& L, const Mor& f) { return f.src + L.d_apply(f.arrow); }

Mor mor_identity(const Vec& x, std::size_t n1) { return Mor{x, Vec(n1)}; }

Mor mor_compose(const L2Data& L, const Mor& f, const Mor& g) {
    if (!(mor_target(L, f) == g.src)) throw Incompatible("morphisms are not composable");
    return Mor{f.src, f.arrow + g.arrow};
}

Mor mor_bracket(const L2Data& L, const Mor& f, const Mor& g, int formula) {
    // f : x → y, g : a → b;  [f,g] = ([x,a], [f,a] + [y,g]) = ([x,a], [x,g] + [f,b])
    Vec src = L.bracket00(f.src, g.src);
    if (formula == 1) {
        Vec y = mor_target(L, f);
        // [f_arrow, a] = -[a, f_arrow]
        Vec arrow = -L.bracket01(g.src, f.arrow) + L.bracket01(y, g.arrow);
        return Mor{std::move(src), std::move(arrow)};
    }
    Vec b = mor_target(L, g);
    Vec arrow = L.bracket01(f.src, g.arrow) - L.bracket01(b, f.arrow);
    return Mor{std::move(src), std::move(arrow)};
}

namespace {

/// Running vertical composite of one side of the Jacobiator octagon. Each
/// stage is a sum of named morphisms padded by the unique identity that makes
/// the composite well-defined; identity padding contributes no arrow.
struct OctagonPath {
    Vec src, target, arrow;

    static OctagonPath start(const L2Data& L, const Mor& m) {
        return OctagonPath{m.src, mor_target(L, m), m.arrow};
    }

    void stage(const L2Data& L, const std::vector<Mor>& named) {
        for (const auto& m : named) {
            target += L.d_apply(m.arrow);
            arrow += m.arrow;
        }
    }
};

}  // namespace

JacobiatorResult jacobiator_identity_holds(const L2Data& L) {
    L2Report rep = validate_l2(L);
    if (!rep.ok_through_h()) throw NotAnL2("conditions (a)-(h) must hold first");

    const std::size_t n0 = L.n0;
    auto J = [&](const Vec& a, const Vec& b, const Vec& c) {
        return Mor{L.bracket00(L.bracket00(a, b), c), L.l3_eval(a, b, c)};
    };
    auto bracket_right = [&](const Mor& f, const Vec& y) {
        // [f, 1_y]
        return mor_bracket(L, f, mor_identity(y, L.n1));
    };
    auto bracket_left = [&](const Vec& w, const Mor& f) {
        // [1_w, f]
        return mor_bracket(L, mor_identity(w, L.n1), f);
    };

    JacobiatorResult res;
    for (std::size_t iw = 0; iw < n0; ++iw)
        for (std::size_t ix = 0; ix < n0; ++ix)
            for (std::size_t iy = 0; iy < n0; ++iy)
                for (std::size_t iz = 0; iz < n0; ++iz) {
                    Vec w = unit(n0, iw), x = unit(n0, ix), y = unit(n0, iy), z = unit(n0, iz);

                    // J_{[w,x],y,z} ([J_{w,x,z},y]+1) (J_{w,[x,z],y} + J_{[w,z],x,y} + J_{w,x,[y,z]})
                    OctagonPath lhs = OctagonPath::start(L, J(L.bracket00(w, x), y, z));
                    lhs.stage(L, {bracket_right(J(w, x, z), y)});
                    lhs.stage(L, {J(w, L.bracket00(x, z), y), J(L.bracket00(w, z), x, y),
                                  J(w, x, L.bracket00(y, z))});

                    // [J_{w,x,y},z] (J_{[w,y],x,z} + J_{w,[x,y],z}) ([J_{w,y,z},x]+1) ([w,J_{x,y,z}]+1)
                    OctagonPath rhs = OctagonPath::start(L, bracket_right(J(w, x, y), z));
                    rhs.stage(L, {J(L.bracket00(w, y), x, z), J(w, L.bracket00(x, y), z)});
                    rhs.stage(L, {bracket_right(J(w, y, z), x)});
                    rhs.stage(L, {bracket_left(w, J(x, y, z))});

                    if (!(lhs.src == rhs.src))
                        throw InternalInconsistency("octagon sides start at different objects");
                    if (!(lhs.arrow == rhs.arrow) || !(lhs.target == rhs.target)) {
                        res.holds = false;
                        res.witness = {{iw, ix, iy, iz}};
                        return res;
                    }
                }
    return res;
}

namespace {

/// Fills a totally antisymmetric l3 tensor from values on increasing tuples.
void fill_l3_antisymmetric(L2Data& L, const std::vector<std::size_t>& t, const Vec& v) {
    std::size_t idx[3] = {t[0], t[1], t[2]};
    // all six permutations with signs
    const int perm[6][4] = {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1},
                            {2, 1, 0, -1}, {2, 0, 1, 1}, {0, 2, 1, -1}};
    for (const auto& pr : perm)
        for (std::size_t p = 0; p < L.n1; ++p)
            L.l3_at(idx[pr[0]], idx[pr[1]], idx[pr[2]], p) = Rational(pr[3]) * v[p];
}

}  // namespace

L2Data build_ghbar(const LieAlgebra& g, const Rational& hbar) {
    if (!validate_lie_algebra(g).ok()) throw NotALieAlgebra("build_ghbar needs a valid Lie algebra");
    L2Data L(g.dim, 1);
    L.l2_00 = g.c;
    Cochain w = killing_cocycle(g, hbar);
    for (const auto& [tuple, v] : w.values) fill_l3_antisymmetric(L, tuple, v);
    return L;
}

L2Data from_quadruple(const LieAlgebra& g, const Representation& R, const Cochain& w3) {
    if (!validate_lie_algebra(g).ok()) throw NotALieAlgebra("from_quadruple needs a valid Lie algebra");
    if (!validate_representation(R).valid) throw InvalidShape("from_quadruple needs a valid representation");
    if (w3.degree != 3 || !(w3.algebra == g) || w3.rep.dimV != R.dimV)
        throw Incompatible("cocycle degree or coefficient space mismatch");
    if (!is_cocycle(w3)) throw NotACocycle("l3 candidate is not closed");
    L2Data L(g.dim, R.dimV);
    L.l2_00 = g.c;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t p = 0; p < R.dimV; ++p)
            for (std::size_t q = 0; q < R.dimV; ++q) L.l2_01_at(i, p, q) = R.rho[i].at(q, p);
    for (const auto& [tuple, v] : w3.values) fill_l3_antisymmetric(L, tuple, v);
    return L;
}

Vec L2Hom::phi2_eval(const Vec& x, const Vec& y) const {
    Vec r(target.n1);
    for (std::size_t i = 0; i < source.n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < source.n0; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t q = 0; q < target.n1; ++q) {
                const Rational& c = phi2_at(i, j, q);
                if (c != 0) r[q] += f * c;
            }
        }
    }
    return r;
}

HomReport validate_hom(const L2Hom& F) {
    const L2Data& V = F.source;
    const L2Data& W = F.target;
    if (F.phi0.rows() != W.n0 || F.phi0.cols() != V.n0 || F.phi1.rows() != W.n1 ||
        F.phi1.cols() != V.n1 || F.phi2.size() != V.n0 * V.n0 * W.n1)
        throw InvalidShape("L2Hom matrices have inconsistent shapes");
    HomReport rep;
    rep.chain_map = F.phi0 * V.d == W.d * F.phi1;
    for (std::size_t i = 0; i < V.n0 && rep.phi2_antisymmetric; ++i)
        for (std::size_t j = 0; j < V.n0; ++j) {
            bool ok = true;
            for (std::size_t q = 0; q < W.n1; ++q)
                if (F.phi2_at(i, j, q) != -F.phi2_at(j, i, q)) ok = false;
            if (!ok) {
                rep.phi2_antisymmetric = false;
                break;
            }
        }

    const std::size_t n0 = V.n0, n1 = V.n1;
    auto u0 = [&](std::size_t i) { return unit(n0, i); };

    // d' phi2(x,y) = phi0 [x,y] - [phi0 x, phi0 y]
    for (std::size_t i = 0; i < n0 && rep.cond[0].holds; ++i)
        for (std::size_t j = 0; j < n0; ++j) {
            Vec lhs = W.d_apply(F.phi2_eval(u0(i), u0(j)));
            Vec rhs = F.phi0.apply(V.bracket00(u0(i), u0(j))) -
                      W.bracket00(F.phi0.column(i), F.phi0.column(j));
            if (!(lhs == rhs)) {
                rep.cond[0] = {false, {i, j}};
                break;
            }
        }

    // phi2(dh, dk) = phi1 [h,k] - [phi1 h, phi1 k]
    for (std::size_t p = 0; p < n1 && rep.cond[1].holds; ++p)
        for (std::size_t q = 0; q < n1; ++q) {
            Vec lhs = F.phi2_eval(V.d.column(p), V.d.column(q));
            Vec rhs = F.phi1.apply(bracket11(V, unit(n1, p), unit(n1, q))) -
                      bracket11(W, F.phi1.column(p), F.phi1.column(q));
            if (!(lhs == rhs)) {
                rep.cond[1] = {false, {p, q}};
                break;
            }
        }

    // phi1(l3(x,y,z)) + phi2(x,[y,z]) + [phi0 x, phi2(y,z)]
    //   = l3'(phi0 x, phi0 y, phi0 z) + phi2([x,y],z) + phi2(y,[x,z])
    //     + [phi2(x,y), phi0 z] + [phi0 y, phi2(x,z)]
    for (std::size_t i = 0; i < n0 && rep.cond[2].holds; ++i)
        for (std::size_t j = 0; j < n0 && rep.cond[2].holds; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                Vec x = u0(i), y = u0(j), z = u0(k);
                Vec px = F.phi0.column(i), py = F.phi0.column(j), pz = F.phi0.column(k);
                Vec lhs = F.phi1.apply(V.l3_eval(x, y, z)) +
                          F.phi2_eval(x, V.bracket00(y, z)) +
                          W.bracket01(px, F.phi2_eval(y, z));
                Vec rhs = W.l3_eval(px, py, pz) + F.phi2_eval(V.bracket00(x, y), z) +
                          F.phi2_eval(y, V.bracket00(x, z)) -
                          W.bracket01(pz, F.phi2_eval(x, y)) +
                          W.bracket01(py, F.phi2_eval(x, z));
                if (!(lhs == rhs)) {
                    rep.cond[2] = {false, {i, j, k}};
                    break;
                }
            }
    return rep;
}

L2Hom identity_hom(const L2Data& L) {
    L2Hom F;
    F.source = L;
    F.target = L;
    F.phi0 = Matrix::identity(L.n0);
    F.phi1 = Matrix::identity(L.n1);
    F.phi2.assign(L.n0 * L.n0 * L.n1, Rational(0));
    return F;
}

L2Hom compose_hom(const L2Hom& F, const L2Hom& G) {
    if (!(F.target == G.source)) throw Incompatible("compose_hom: endpoint mismatch");
    L2Hom H;
    H.source = F.source;
    H.target = G.target;
    H.phi0 = G.phi0 * F.phi0;
    H.phi1 = G.phi1 * F.phi1;
    H.phi2.assign(H.source.n0 * H.source.n0 * H.target.n1, Rational(0));
    for (std::size_t i = 0; i < H.source.n0; ++i)
        for (std::size_t j = 0; j < H.source.n0; ++j) {
            Vec v = G.phi2_eval(F.phi0.column(i), F.phi0.column(j));
            Vec w(F.target.n1);
            for (std::size_t q = 0; q < F.target.n1; ++q) w[q] = F.phi2_at(i, j, q);
            v += G.phi1.apply(w);
            for (std::size_t q = 0; q < H.target.n1; ++q) H.phi2_at(i, j, q) = v[q];
        }
    return H;
}

namespace {

bool same_hom(const L2Hom& a, const L2Hom& b) {
    return a.source == b.source && a.target == b.target && a.phi0 == b.phi0 &&
           a.phi1 == b.phi1 && a.phi2 == b.phi2;
}

}  // namespace

TwoHomReport validate_two_hom(const L2TwoHom& T) {
    const L2Hom& phi = T.source;
    const L2Hom& psi = T.target;
    if (!(phi.source == psi.source) || !(phi.target == psi.target))
        throw Incompatible("2-homomorphism endpoints must be parallel homs");
    const L2Data& V = phi.source;
    const L2Data& W = phi.target;
    if (T.tau.rows() != W.n1 || T.tau.cols() != V.n0)
        throw InvalidShape("tau must map V0 into the target V1");
    TwoHomReport rep;
    rep.homotopy = (W.d * T.tau == psi.phi0 - phi.phi0) && (T.tau * V.d == psi.phi1 - phi.phi1);

    // phi2(x,y) + tau([x,y]) = [tau x, tau y] + psi2(x,y); the bracket of two
    // degree-1 elements vanishes by (c) but is evaluated all the same.
    for (std::size_t i = 0; i < V.n0 && rep.bracket_condition.holds; ++i)
        for (std::size_t j = 0; j < V.n0; ++j) {
            Vec x = unit(V.n0, i), y = unit(V.n0, j);
            Vec lhs = phi.phi2_eval(x, y) + T.tau.apply(V.bracket00(x, y));
            Vec rhs = bracket11(W, T.tau.column(i), T.tau.column(j)) + psi.phi2_eval(x, y);
            if (!(lhs == rhs)) {
                rep.bracket_condition = {false, {i, j}};
                break;
            }
        }
    return rep;
}

L2TwoHom identity_two_hom(const L2Hom& F) {
    return L2TwoHom{F, F, Matrix::zero(F.target.n1, F.source.n0)};
}

L2TwoHom vcompose(const L2TwoHom& T1, const L2TwoHom& T2) {
    if (!same_hom(T1.target, T2.source)) throw Incompatible("vcompose: middle homs differ");
    return L2TwoHom{T1.source, T2.target, T1.tau + T2.tau};
}

L2TwoHom hcompose(const L2TwoHom& T1, const L2TwoHom& T2) {
    if (!(T1.source.target == T2.source.source))
        throw Incompatible("hcompose: 2-homs are not horizontally composable");
    // tau(x) = tau'(phi0(x)) + psi1'(tau(x)), which must agree with
    // phi1'(tau(x)) + tau'(psi0(x)).
    Matrix first = T2.tau * T1.source.phi0 + T2.target.phi1 * T1.tau;
    Matrix second = T2.source.phi1 * T1.tau + T2.tau * T1.target.phi0;
    if (!(first == second))
        throw TheoremViolation("the two horizontal composite formulas disagree");
    return L2TwoHom{compose_hom(T1.source, T2.source), compose_hom(T1.target, T2.target), first};
}

TwoVect to_two_vect(const L2Data& L) {
    TwoVect W;
    W.o = L.n0;
    W.m = L.n0 + L.n1;
    W.s = Matrix::identity(L.n0).hcat(Matrix::zero(L.n0, L.n1));
    W.t = Matrix::identity(L.n0).hcat(L.d);
    W.i = Matrix(W.m, W.o);
    for (std::size_t k = 0; k < L.n0; ++k) W.i.at(k, k) = 1;
    return W;
}

namespace {

void check_two_vect(const TwoVect& W) {
    if (W.s.rows() != W.o || W.s.cols() != W.m || W.t.rows() != W.o || W.t.cols() != W.m ||
        W.i.rows() != W.m || W.i.cols() != W.o)
        throw InvalidShape("2-vector space maps have inconsistent shapes");
    Matrix id = Matrix::identity(W.o);
    if (!(W.s * W.i == id) || !(W.t * W.i == id))
        throw NotATwoVect("s i = t i = id fails");
}

}  // namespace

L2Data from_two_vect(const TwoVect& W) {
    check_two_vect(W);
    auto ker = kernel_basis(W.s);
    L2Data L(W.o, ker.size());
    for (std::size_t p = 0; p < ker.size(); ++p) {
        Vec col = W.t.apply(ker[p]);
        for (std::size_t r = 0; r < W.o; ++r) L.d.at(r, p) = col[r];
    }
    return L;
}

TwoVectIso two_vect_roundtrip_iso(const TwoVect& W) {
    check_two_vect(W);
    auto ker = kernel_basis(W.s);
    Matrix M(W.m, W.o + ker.size());
    for (std::size_t r = 0; r < W.m; ++r)
        for (std::size_t c = 0; c < W.o; ++c) M.at(r, c) = W.i.at(r, c);
    for (std::size_t p = 0; p < ker.size(); ++p)
        for (std::size_t r = 0; r < W.m; ++r) M.at(r, W.o + p) = ker[p][r];
    auto inv = inverse(M);
    if (!inv) throw NotATwoVect("morphism space does not split as source ⊕ ker(s)");
    TwoVectIso iso;
    iso.P0 = Matrix::identity(W.o);
    iso.P1 = *inv;
    // functor conditions for (P0, P1), exact
    TwoVect W2 = to_two_vect(from_two_vect(W));
    if (!(W2.s * iso.P1 == iso.P0 * W.s) || !(W2.t * iso.P1 == iso.P0 * W.t) ||
        !(iso.P1 * W.i == W2.i * iso.P0))
        throw InternalInconsistency("round-trip iso fails functor equations");
    return iso;
}

namespace {

/// Contraction data for d : V1 → V0 along the pivot-column splitting.
struct Splitting {
    Matrix i0;  // C0' → V0 (coordinate inclusion)
    Matrix p0;  // V0 → C0'
    Matrix i1;  // ker(d) → V1
    Matrix p1;  // V1 → ker(d)
    Matrix h;   // V0 → V1, d h d = d, h d h = h, h i0 = 0, p1 h = 0
};

Splitting make_splitting(const L2Data& L) {
    const std::size_t n0 = L.n0, n1 = L.n1;
    auto piv = rref(L.d).second;  // pivot columns of d: a complement X of ker(d)
    const std::size_t r = piv.size();

    // im(d) basis from pivot columns, then greedily extend by coordinate
    // vectors to a basis of V0; the chosen coordinates span C0'.
    Matrix Q(n0, n0);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t row = 0; row < n0; ++row) Q.at(row, t) = L.d.at(row, piv[t]);
    std::vector<std::size_t> freeRows;
    {
        Matrix probe(n0, r);
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t row = 0; row < n0; ++row) probe.at(row, t) = Q.at(row, t);
        for (std::size_t t = 0; t < n0 && freeRows.size() < n0 - r; ++t) {
            Matrix ext = probe.hcat(Matrix::from_columns({unit(n0, t)}, n0));
            if (rank(ext) > rank(probe)) {
                probe = ext;
                freeRows.push_back(t);
            }
        }
        for (std::size_t t = 0; t < freeRows.size(); ++t) Q.at(freeRows[t], r + t) = 1;
    }
    auto Qinv = inverse(Q);
    if (!Qinv) throw InternalInconsistency("V0 splitting is not a basis");

    Splitting S;
    S.i0 = Matrix(n0, n0 - r);
    for (std::size_t t = 0; t < freeRows.size(); ++t) S.i0.at(freeRows[t], t) = 1;
    S.p0 = Matrix(n0 - r, n0);
    for (std::size_t row = 0; row < n0 - r; ++row)
        for (std::size_t col = 0; col < n0; ++col) S.p0.at(row, col) = Qinv->at(r + row, col);

    // h = X-inclusion ∘ (im(d) coordinates)
    Matrix X(n1, r);
    for (std::size_t t = 0; t < r; ++t) X.at(piv[t], t) = 1;
    Matrix imCoords(r, n0);
    for (std::size_t row = 0; row < r; ++row)
        for (std::size_t col = 0; col < n0; ++col) imCoords.at(row, col) = Qinv->at(row, col);
    S.h = X * imCoords;

    auto ker = kernel_basis(L.d);
    S.i1 = Matrix::from_columns(ker, n1);
    Matrix M1(n1, n1);
    for (std::size_t p = 0; p < ker.size(); ++p)
        for (std::size_t row = 0; row < n1; ++row) M1.at(row, p) = ker[p][row];
    for (std::size_t t = 0; t < r; ++t) M1.at(piv[t], ker.size() + t) = 1;
    auto M1inv = inverse(M1);
    if (!M1inv) throw InternalInconsistency("V1 splitting is not a basis");
    S.p1 = Matrix(ker.size(), n1);
    for (std::size_t row = 0; row < ker.size(); ++row)
        for (std::size_t col = 0; col < n1; ++col) S.p1.at(row, col) = M1inv->at(row, col);
    return S;
}

}  // namespace

Skeletonization skeletonize(const L2Data& L) {
    L2Report rep = validate_l2(L);
    if (!rep.ok()) throw NotAnL2("skeletonize needs a valid 2-term L∞-algebra");

    if (L.is_skeletal()) {
        Skeletonization out;
        out.skeletal = L;
        out.fwd = identity_hom(L);
        out.bwd = identity_hom(L);
        out.fwd_bwd_to_id = identity_two_hom(identity_hom(L));
        out.bwd_fwd_to_id = identity_two_hom(identity_hom(L));
        return out;
    }

    Splitting S = make_splitting(L);
    const std::size_t m0 = S.i0.cols(), m1 = S.i1.cols();
    const std::size_t n0 = L.n0, n1 = L.n1;

    L2Data Sk(m0, m1);
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t j = 0; j < m0; ++j) {
            Vec v = S.p0.apply(L.bracket00(S.i0.column(i), S.i0.column(j)));
            for (std::size_t k = 0; k < m0; ++k) Sk.l2_00_at(i, j, k) = v[k];
        }
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t p = 0; p < m1; ++p) {
            Vec v = S.p1.apply(L.bracket01(S.i0.column(i), S.i1.column(p)));
            for (std::size_t q = 0; q < m1; ++q) Sk.l2_01_at(i, p, q) = v[q];
        }

    // bwd : skeletal → L with psi2(x,y) = -h [i0 x, i0 y]
    auto psi2 = [&](const Vec& x, const Vec& y) {
        return -S.h.apply(L.bracket00(S.i0.apply(x), S.i0.apply(y)));
    };

    // l3' from the hom condition for bwd; the right side must land in ker(d).
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t j = 0; j < m0; ++j)
            for (std::size_t k = 0; k < m0; ++k) {
                Vec x = unit(m0, i), y = unit(m0, j), z = unit(m0, k);
                Vec xt = S.i0.column(i), yt = S.i0.column(j), zt = S.i0.column(k);
                Vec R = L.l3_eval(xt, yt, zt) + psi2(Sk.bracket00(x, y), z) +
                        psi2(y, Sk.bracket00(x, z)) - psi2(x, Sk.bracket00(y, z)) -
                        L.bracket01(zt, psi2(x, y)) + L.bracket01(yt, psi2(x, z)) -
                        L.bracket01(xt, psi2(y, z));
                if (!is_zero(L.d_apply(R)))
                    throw TheoremViolation("transported l3 fails to land in ker(d)");
                Vec v = S.p1.apply(R);
                for (std::size_t p = 0; p < m1; ++p) Sk.l3_at(i, j, k, p) = v[p];
            }

    Skeletonization out;
    out.skeletal = Sk;
    out.bwd.source = Sk;
    out.bwd.target = L;
    out.bwd.phi0 = S.i0;
    out.bwd.phi1 = S.i1;
    out.bwd.phi2.assign(m0 * m0 * n1, Rational(0));
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t j = 0; j < m0; ++j) {
            Vec v = psi2(unit(m0, i), unit(m0, j));
            for (std::size_t q = 0; q < n1; ++q) out.bwd.phi2_at(i, j, q) = v[q];
        }

    // fwd : L → skeletal. phi2 (antisymmetric unknowns for i<j), together
    // with the homotopies tau : compose(fwd,bwd) ⇒ 1_L and
    // tau' : compose(bwd,fwd) ⇒ 1_skeletal, solve a linear system; their
    // existence is what makes the two composites 2-isomorphic to identities.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = i + 1; j < n0; ++j) pairs.emplace_back(i, j);
    const std::size_t nu = pairs.size() * m1;   // fwd.phi2 unknowns
    const std::size_t nt = n1 * n0;             // tau unknowns
    const std::size_t nt2 = m1 * m0;            // tau' unknowns
    auto uidx = [&](std::size_t pr, std::size_t q) { return pr * m1 + q; };
    auto tidx = [&](std::size_t row, std::size_t col) { return nu + row * n0 + col; };
    auto t2idx = [&](std::size_t row, std::size_t col) { return nu + nt + row * m0 + col; };

    // phi2(a, b) as a row over the unknowns, for coordinate vectors a, b.
    auto phi2_row = [&](const Vec& a, const Vec& b, std::size_t q, Vec& row) {
        for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
            auto [i, j] = pairs[pr];
            Rational coeff = a[i] * b[j] - a[j] * b[i];
            if (coeff != 0) row[uidx(pr, q)] += coeff;
        }
    };

    std::vector<Vec> rows;
    Vec rhs;
    const std::size_t nvars = nu + nt + nt2;
    auto add_row = [&](Vec&& row, const Rational& b) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };

    // (2) phi2(d f_p, d f_q) = 0
    for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n1; ++q)
            for (std::size_t s = 0; s < m1; ++s) {
                Vec row(nvars);
                phi2_row(L.d.column(p), L.d.column(q), s, row);
                add_row(std::move(row), 0);
            }

    // (3) the l3 compatibility for fwd
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                Vec x = unit(n0, i), y = unit(n0, j), z = unit(n0, k);
                Vec px = S.p0.column(i), py = S.p0.column(j), pz = S.p0.column(k);
                // constant part: phi1(l3(x,y,z)) - l3'(px,py,pz)
                Vec cst = S.p1.apply(L.l3_eval(x, y, z)) - Sk.l3_eval(px, py, pz);
                for (std::size_t s = 0; s < m1; ++s) {
                    Vec row(nvars);
                    // + phi2(x,[y,z])
                    phi2_row(x, L.bracket00(y, z), s, row);
                    // + [px, phi2(y,z)]: l2_01'(px, ·) acting on the unknown vector
                    for (std::size_t q = 0; q < m1; ++q) {
                        Rational coeff = 0;
                        for (std::size_t a = 0; a < m0; ++a)
                            if (px[a] != 0) coeff += px[a] * Sk.l2_01_at(a, q, s);
                        if (coeff != 0) {
                            Vec sub(nvars);
                            phi2_row(y, z, q, sub);
                            for (std::size_t v = 0; v < nvars; ++v) row[v] += coeff * sub[v];
                        }
                    }
                    // - phi2([x,y],z) - phi2(y,[x,z])
                    Vec sub(nvars);
                    phi2_row(L.bracket00(x, y), z, s, sub);
                    phi2_row(y, L.bracket00(x, z), s, sub);
                    for (std::size_t v = 0; v < nvars; ++v) row[v] -= sub[v];
                    // + [phi2(x,y), pz] = -l2_01'(pz, phi2(x,y)); moved to the
                    // left side as +l2_01'(pz, ·)
                    for (std::size_t q = 0; q < m1; ++q) {
                        Rational coeff = 0;
                        for (std::size_t a = 0; a < m0; ++a)
                            if (pz[a] != 0) coeff += pz[a] * Sk.l2_01_at(a, q, s);
                        if (coeff != 0) {
                            Vec sub2(nvars);
                            phi2_row(x, y, q, sub2);
                            for (std::size_t v = 0; v < nvars; ++v) row[v] += coeff * sub2[v];
                        }
                    }
                    // - [py, phi2(x,z)]
                    for (std::size_t q = 0; q < m1; ++q) {
                        Rational coeff = 0;
                        for (std::size_t a = 0; a < m0; ++a)
                            if (py[a] != 0) coeff += py[a] * Sk.l2_01_at(a, q, s);
                        if (coeff != 0) {
                            Vec sub2(nvars);
                            phi2_row(x, z, q, sub2);
                            for (std::size_t v = 0; v < nvars; ++v) row[v] -= coeff * sub2[v];
                        }
                    }
                    add_row(std::move(row), -cst[s]);
                }
            }

    // tau : compose(fwd,bwd) ⇒ 1_L. Chain homotopy conditions are linear in
    // tau only; the bracket condition couples tau with fwd.phi2.
    Matrix dh0 = Matrix::identity(n0) - S.i0 * S.p0;  // = d tau required
    Matrix dh1 = Matrix::identity(n1) - S.i1 * S.p1;  // = tau d required
    for (std::size_t r = 0; r < n0; ++r)
        for (std::size_t c = 0; c < n0; ++c) {
            Vec row(nvars);
            for (std::size_t p = 0; p < n1; ++p)
                if (L.d.at(r, p) != 0) row[tidx(p, c)] += L.d.at(r, p);
            add_row(std::move(row), dh0.at(r, c));
        }
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < n1; ++c) {
            Vec row(nvars);
            for (std::size_t a = 0; a < n0; ++a)
                if (L.d.at(a, c) != 0) row[tidx(r, a)] += L.d.at(a, c);
            add_row(std::move(row), dh1.at(r, c));
        }
    // (fwd bwd)2(x,y) + tau([x,y]) = 0, with
    // (fwd bwd)2(x,y) = psi2(p0 x, p0 y) + i1 phi2(x,y)
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j) {
            Vec cst = psi2(S.p0.column(i), S.p0.column(j));
            Vec br = L.bracket00(unit(n0, i), unit(n0, j));
            for (std::size_t q = 0; q < n1; ++q) {
                Vec row(nvars);
                for (std::size_t s = 0; s < m1; ++s)
                    if (S.i1.at(q, s) != 0) {
                        Vec sub(nvars);
                        phi2_row(unit(n0, i), unit(n0, j), s, sub);
                        for (std::size_t v = 0; v < nvars; ++v) row[v] += S.i1.at(q, s) * sub[v];
                    }
                for (std::size_t a = 0; a < n0; ++a)
                    if (br[a] != 0) row[tidx(q, a)] += br[a];
                add_row(std::move(row), -cst[q]);
            }
        }
    // tau' : compose(bwd,fwd) ⇒ 1_skeletal: phi2(i0 x, i0 y) + tau'(l2'(x,y)) = 0
    for (std::size_t i = 0; i < m0; ++i)
        for (std::size_t j = 0; j < m0; ++j) {
            Vec br = Sk.bracket00(unit(m0, i), unit(m0, j));
            for (std::size_t q = 0; q < m1; ++q) {
                Vec row(nvars);
                phi2_row(S.i0.column(i), S.i0.column(j), q, row);
                for (std::size_t a = 0; a < m0; ++a)
                    if (br[a] != 0) row[t2idx(q, a)] += br[a];
                add_row(std::move(row), 0);
            }
        }

    Matrix sys(rows.size(), nvars);
    Vec sysRhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < nvars; ++c) sys.at(r, c) = rows[r][c];
        sysRhs[r] = rhs[r];
    }
    auto sol = solve_linear(sys, sysRhs);
    if (!sol) throw TheoremViolation("no homotopy inverse data found for skeletonization");

    out.fwd.source = L;
    out.fwd.target = Sk;
    out.fwd.phi0 = S.p0;
    out.fwd.phi1 = S.p1;
    out.fwd.phi2.assign(n0 * n0 * m1, Rational(0));
    for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
        auto [i, j] = pairs[pr];
        for (std::size_t q = 0; q < m1; ++q) {
            out.fwd.phi2_at(i, j, q) = (*sol)[uidx(pr, q)];
            out.fwd.phi2_at(j, i, q) = -(*sol)[uidx(pr, q)];
        }
    }
    Matrix tau(n1, n0), tau2(m1, m0);
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < n0; ++c) tau.at(r, c) = (*sol)[tidx(r, c)];
    for (std::size_t r = 0; r < m1; ++r)
        for (std::size_t c = 0; c < m0; ++c) tau2.at(r, c) = (*sol)[t2idx(r, c)];
    out.fwd_bwd_to_id = L2TwoHom{compose_hom(out.fwd, out.bwd), identity_hom(L), tau};
    out.bwd_fwd_to_id = L2TwoHom{compose_hom(out.bwd, out.fwd), identity_hom(Sk), tau2};

    if (!validate_l2(out.skeletal).ok() || !validate_hom(out.bwd).ok() ||
        !validate_hom(out.fwd).ok() || !validate_two_hom(out.fwd_bwd_to_id).ok() ||
        !validate_two_hom(out.bwd_fwd_to_id).ok())
        throw TheoremViolation("skeletonization output failed validation");
    return out;
}

Representation induced_rep(const L2Data& L) {
    Representation R;
    R.algebra = L.v0_algebra();
    R.dimV = L.n1;
    R.rho.reserve(L.n0);
    for (std::size_t i = 0; i < L.n0; ++i) {
        Matrix m(L.n1, L.n1);
        for (std::size_t p = 0; p < L.n1; ++p)
            for (std::size_t q = 0; q < L.n1; ++q) m.at(q, p) = L.l2_01_at(i, p, q);
        R.rho.push_back(std::move(m));
    }
    return R;
}

Cochain l3_cochain(const L2Data& L) {
    Cochain w = zero_cochain(L.v0_algebra(), induced_rep(L), 3);
    for (const auto& tuple : increasing_tuples(L.n0, 3)) {
        Vec v(L.n1);
        bool nonzero = false;
        for (std::size_t p = 0; p < L.n1; ++p) {
            v[p] = L.l3_at(tuple[0], tuple[1], tuple[2], p);
            nonzero = nonzero || v[p] != 0;
        }
        if (nonzero) w.values.emplace(tuple, std::move(v));
    }
    return w;
}

bool equivalent_skeletal(const L2Data& L1, const L2Data& L2) {
    if (!L1.is_skeletal() || !L2.is_skeletal())
        throw NotComparable("equivalent_skeletal needs skeletal inputs");
    if (L1.n0 != L2.n0 || L1.n1 != L2.n1 || L1.l2_00 != L2.l2_00 || L1.l2_01 != L2.l2_01)
        throw NotComparable("equivalent_skeletal needs matching (g, V, rho) data");
    return cohomologous(l3_cochain(L1), l3_cochain(L2));
}

}  // namespace qlie
