#include "qlie/lie.hpp"

namespace qlie {

namespace {

Vec unit(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

}  // namespace

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw InvalidShape("bracket: bad vector length");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const Rational& cij = c_at(i, j, k);
                if (cij != 0) r[k] += f * cij;
            }
        }
    }
    return r;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = c_at(i, j, k);
    return r;
}

LieReport validate_lie_algebra(const LieAlgebra& L) {
    const std::size_t n = L.dim;
    if (L.c.size() != n * n * n) throw InvalidShape("structure tensor must have dim^3 entries");
    LieReport rep;
    for (std::size_t i = 0; i < n && rep.antisymmetric; ++i)
        for (std::size_t j = 0; j < n && rep.antisymmetric; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (L.c_at(i, j, k) != -L.c_at(j, i, k)) {
                    rep.antisymmetric = false;
                    rep.antisymmetry_witness = {{i, j}};
                    break;
                }
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 on all triples.
    for (std::size_t i = 0; i < n && rep.jacobi; ++i)
        for (std::size_t j = 0; j < n && rep.jacobi; ++j)
            for (std::size_t k = 0; k < n && rep.jacobi; ++k) {
                Vec s = L.bracket(L.bracket_basis(i, j), unit(n, k));
                s += L.bracket(L.bracket_basis(j, k), unit(n, i));
                s += L.bracket(L.bracket_basis(k, i), unit(n, j));
                if (!is_zero(s)) {
                    rep.jacobi = false;
                    rep.jacobi_witness = {{i, j, k}};
                }
            }
    return rep;
}

LieAlgebra catalog(const std::string& name) {
    if (name.rfind("abelian:", 0) == 0) {
        std::size_t n = 0;
        try {
            n = std::stoul(name.substr(8));
        } catch (const std::exception&) {
            throw UnknownCatalogEntry("bad abelian dimension in '" + name + "'");
        }
        return LieAlgebra(n);
    }
    if (name == "so3") {
        LieAlgebra L(3);
        // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
        L.c_at(0, 1, 2) = 1;
        L.c_at(1, 0, 2) = -1;
        L.c_at(1, 2, 0) = 1;
        L.c_at(2, 1, 0) = -1;
        L.c_at(2, 0, 1) = 1;
        L.c_at(0, 2, 1) = -1;
        return L;
    }
    if (name == "sl2") {
        LieAlgebra L(3);
        // basis (h,e,f): [h,e]=2e, [h,f]=-2f, [e,f]=h
        L.c_at(0, 1, 1) = 2;
        L.c_at(1, 0, 1) = -2;
        L.c_at(0, 2, 2) = -2;
        L.c_at(2, 0, 2) = 2;
        L.c_at(1, 2, 0) = 1;
        L.c_at(2, 1, 0) = -1;
        return L;
    }
    if (name == "heis3") {
        LieAlgebra L(3);
        // [e1,e2]=e3, rest zero
        L.c_at(0, 1, 2) = 1;
        L.c_at(1, 0, 2) = -1;
        return L;
    }
    throw UnknownCatalogEntry("unknown catalog entry '" + name + "'");
}

Matrix killing_form(const LieAlgebra& L) {
    const std::size_t n = L.dim;
    Representation ad = adjoint_rep(L);
    Matrix K(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t = trace(ad.rho[i] * ad.rho[j]);
            K.at(i, j) = t;
            K.at(j, i) = t;
        }
    return K;
}

bool is_semisimple(const LieAlgebra& L) { return rank(killing_form(L)) == L.dim; }

Vec Representation::act(const Vec& x, const Vec& v) const {
    if (x.size() != algebra.dim) throw InvalidShape("act: bad algebra vector");
    Vec r(dimV);
    for (std::size_t i = 0; i < algebra.dim; ++i) {
        if (x[i] == 0) continue;
        Vec t = rho[i].apply(v);
        for (std::size_t a = 0; a < dimV; ++a) r[a] += x[i] * t[a];
    }
    return r;
}

RepReport validate_representation(const Representation& R) {
    const std::size_t n = R.algebra.dim;
    if (R.rho.size() != n) throw InvalidShape("need one rho matrix per basis element");
    for (const auto& m : R.rho)
        if (m.rows() != R.dimV || m.cols() != R.dimV)
            throw InvalidShape("rho matrices must be dimV x dimV");
    RepReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs(R.dimV, R.dimV);
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& cij = R.algebra.c_at(i, j, k);
                if (cij != 0) lhs = lhs + cij * R.rho[k];
            }
            Matrix rhs = R.rho[i] * R.rho[j] - R.rho[j] * R.rho[i];
            if (!(lhs == rhs)) {
                rep.valid = false;
                rep.witness = {{i, j}};
                return rep;
            }
        }
    return rep;
}

Representation adjoint_rep(const LieAlgebra& L) {
    const std::size_t n = L.dim;
    Representation R;
    R.algebra = L;
    R.dimV = n;
    R.rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n);
        // ad(e_i) e_j = [e_i, e_j] = sum_k c(i,j,k) e_k, so m(k,j) = c(i,j,k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.at(k, j) = L.c_at(i, j, k);
        R.rho.push_back(std::move(m));
    }
    return R;
}

Representation trivial_rep(const LieAlgebra& L, std::size_t dimV) {
    Representation R;
    R.algebra = L;
    R.dimV = dimV;
    R.rho.assign(L.dim, Matrix::zero(dimV, dimV));
    return R;
}

}  // namespace qlie
