#include "qlie/cohomology.hpp"

#include <algorithm>

namespace qlie {

namespace {

void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.algebra.dim != b.algebra.dim || a.rep.dimV != b.rep.dimV ||
        !(a.algebra == b.algebra))
        throw Incompatible("cochains have mismatched degree, algebra or representation");
}

}  // namespace

bool Cochain::is_zero() const {
    for (const auto& [idx, v] : values)
        if (!qlie::is_zero(v)) return false;
    return true;
}

bool Cochain::operator==(const Cochain& other) const {
    check_compatible(*this, other);
    return cochain_sub(*this, other).is_zero();
}

Cochain zero_cochain(const LieAlgebra& L, const Representation& R, std::size_t degree) {
    Cochain w;
    w.algebra = L;
    w.rep = R;
    w.degree = degree;
    return w;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    Cochain r = a;
    for (const auto& [idx, v] : b.values) {
        auto it = r.values.find(idx);
        if (it == r.values.end())
            r.values.emplace(idx, v);
        else
            it->second += v;
    }
    return r;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    Cochain r = a;
    for (const auto& [idx, v] : b.values) {
        auto it = r.values.find(idx);
        if (it == r.values.end())
            r.values.emplace(idx, -v);
        else
            it->second -= v;
    }
    return r;
}

Vec eval_cochain(const Cochain& w, std::vector<std::size_t> indices) {
    if (indices.size() != w.degree) throw InvalidShape("eval_cochain: wrong tuple length");
    for (auto i : indices)
        if (i >= w.algebra.dim) throw IndexError("eval_cochain: index out of range");
    Vec zero(w.rep.dimV);
    // Sort with sign; zero on repeats.
    int sign = 1;
    for (std::size_t a = 0; a + 1 < indices.size(); ++a)
        for (std::size_t b = 0; b + 1 < indices.size() - a; ++b)
            if (indices[b] > indices[b + 1]) {
                std::swap(indices[b], indices[b + 1]);
                sign = -sign;
            }
    for (std::size_t a = 0; a + 1 < indices.size(); ++a)
        if (indices[a] == indices[a + 1]) return zero;
    auto it = w.values.find(indices);
    if (it == w.values.end()) return zero;
    return sign == 1 ? it->second : -it->second;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n > dim) return out;
    std::vector<std::size_t> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    out.push_back(t);
    if (n == 0) return out;
    while (true) {
        std::size_t i = n;
        while (i > 0 && t[i - 1] == (i - 1) + dim - n) --i;
        if (i == 0) return out;
        --i;
        ++t[i];
        for (std::size_t j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
        out.push_back(t);
    }
}

Cochain coboundary(const Cochain& w) {
    const LieAlgebra& L = w.algebra;
    const Representation& R = w.rep;
    const std::size_t n = w.degree;
    Cochain out = zero_cochain(L, R, n + 1);
    for (const auto& tuple : increasing_tuples(L.dim, n + 1)) {
        Vec val(R.dimV);
        // first sum: (-1)^{i+1} rho(v_i) w(.. v̂_i ..), i 1-based
        for (std::size_t i = 0; i < n + 1; ++i) {
            std::vector<std::size_t> rest;
            rest.reserve(n);
            for (std::size_t a = 0; a < n + 1; ++a)
                if (a != i) rest.push_back(tuple[a]);
            Vec t = R.rho[tuple[i]].apply(eval_cochain(w, rest));
            if (i % 2 == 0)
                val += t;
            else
                val -= t;
        }
        // second sum: (-1)^{j+k} w([v_j,v_k], .. v̂_j .. v̂_k ..), j<k 1-based
        for (std::size_t j = 0; j < n + 1; ++j)
            for (std::size_t k = j + 1; k < n + 1; ++k) {
                Vec br = L.bracket_basis(tuple[j], tuple[k]);
                std::vector<std::size_t> rest;
                rest.reserve(n - 1);
                for (std::size_t a = 0; a < n + 1; ++a)
                    if (a != j && a != k) rest.push_back(tuple[a]);
                int sgn = ((j + 1 + k + 1) % 2 == 0) ? 1 : -1;
                for (std::size_t m = 0; m < L.dim; ++m) {
                    if (br[m] == 0) continue;
                    std::vector<std::size_t> args;
                    args.reserve(n);
                    args.push_back(m);
                    for (auto r : rest) args.push_back(r);
                    Vec t = eval_cochain(w, args);
                    for (std::size_t a = 0; a < R.dimV; ++a)
                        val[a] += Rational(sgn) * br[m] * t[a];
                }
            }
        if (!is_zero(val)) out.values.emplace(tuple, std::move(val));
    }
    return out;
}

Vec cochain_coordinates(const Cochain& w) {
    auto tuples = increasing_tuples(w.algebra.dim, w.degree);
    Vec coords(tuples.size() * w.rep.dimV);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        auto it = w.values.find(tuples[t]);
        if (it == w.values.end()) continue;
        for (std::size_t a = 0; a < w.rep.dimV; ++a) coords[t * w.rep.dimV + a] = it->second[a];
    }
    return coords;
}

Cochain cochain_from_coordinates(const LieAlgebra& L, const Representation& R,
                                 std::size_t degree, const Vec& coords) {
    auto tuples = increasing_tuples(L.dim, degree);
    if (coords.size() != tuples.size() * R.dimV)
        throw InvalidShape("cochain coordinate vector has wrong length");
    Cochain w = zero_cochain(L, R, degree);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Vec v(R.dimV);
        bool nonzero = false;
        for (std::size_t a = 0; a < R.dimV; ++a) {
            v[a] = coords[t * R.dimV + a];
            nonzero = nonzero || v[a] != 0;
        }
        if (nonzero) w.values.emplace(tuples[t], std::move(v));
    }
    return w;
}

Matrix coboundary_matrix(const LieAlgebra& L, const Representation& R, std::size_t n) {
    auto dom = increasing_tuples(L.dim, n);
    auto cod = increasing_tuples(L.dim, n + 1);
    Matrix m(cod.size() * R.dimV, dom.size() * R.dimV);
    for (std::size_t t = 0; t < dom.size(); ++t)
        for (std::size_t a = 0; a < R.dimV; ++a) {
            Cochain basis = zero_cochain(L, R, n);
            Vec v(R.dimV);
            v[a] = 1;
            basis.values.emplace(dom[t], std::move(v));
            Vec img = cochain_coordinates(coboundary(basis));
            for (std::size_t r = 0; r < img.size(); ++r) m.at(r, t * R.dimV + a) = img[r];
        }
    return m;
}

CohomologyDims cohomology_dims(const LieAlgebra& L, const Representation& R, std::size_t n) {
    CohomologyDims d;
    auto cn = increasing_tuples(L.dim, n).size() * R.dimV;
    Matrix dn = coboundary_matrix(L, R, n);
    d.dimZ = cn - rank(dn);
    d.dimB = n == 0 ? 0 : rank(coboundary_matrix(L, R, n - 1));
    d.dimH = d.dimZ - d.dimB;
    return d;
}

bool is_cocycle(const Cochain& w) { return coboundary(w).is_zero(); }

bool is_coboundary(const Cochain& w) {
    if (w.degree == 0) return w.is_zero();
    Matrix d = coboundary_matrix(w.algebra, w.rep, w.degree - 1);
    return solve_linear(d, cochain_coordinates(w)).has_value();
}

bool cohomologous(const Cochain& w1, const Cochain& w2) {
    return is_coboundary(cochain_sub(w1, w2));
}

Cochain killing_cocycle(const LieAlgebra& L, const Rational& hbar) {
    Matrix K = killing_form(L);
    Cochain w = zero_cochain(L, trivial_rep(L, 1), 3);
    for (const auto& tuple : increasing_tuples(L.dim, 3)) {
        // hbar * <e_i, [e_j, e_k]>
        Vec br = L.bracket_basis(tuple[1], tuple[2]);
        Rational val = 0;
        for (std::size_t m = 0; m < L.dim; ++m)
            if (br[m] != 0) val += K.at(tuple[0], m) * br[m];
        val *= hbar;
        if (val != 0) w.values.emplace(tuple, Vec{val});
    }
    return w;
}

}  // namespace qlie
