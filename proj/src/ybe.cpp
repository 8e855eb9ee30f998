#include "qlie/ybe.hpp"

namespace qlie {

SetYbeResult shelf_braiding_ybe(const Magma2& Q) {
    Q.check_wellformed();
    const std::size_t m = Q.size;
    auto B = [&](std::size_t& x, std::size_t& y) {
        std::size_t nx = y, ny = Q.lconj(y, x);
        x = nx;
        y = ny;
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                std::size_t a1 = x, a2 = y, a3 = z;
                B(a1, a2);
                B(a2, a3);
                B(a1, a2);
                std::size_t b1 = x, b2 = y, b3 = z;
                B(b2, b3);
                B(b1, b2);
                B(b2, b3);
                if (a1 != b1 || a2 != b2 || a3 != b3)
                    return {false, std::array<std::size_t, 3>{x, y, z}};
            }
    return {};
}

InverseBraidingReport inverse_braiding_checks(const Magma2& Q) {
    Q.check_wellformed();
    if (!Q.has_right()) throw MissingRightTable("inverse_braiding_checks needs both tables");
    const std::size_t m = Q.size;
    auto B = [&](std::size_t& x, std::size_t& y) {
        std::size_t nx = y, ny = Q.lconj(y, x);
        x = nx;
        y = ny;
    };
    auto Bbar = [&](std::size_t& x, std::size_t& y) {
        std::size_t nx = Q.rconj(y, x), ny = x;
        x = nx;
        y = ny;
    };
    InverseBraidingReport rep;
    for (std::size_t x = 0; x < m && rep.bbar_ybe.ok; ++x)
        for (std::size_t y = 0; y < m && rep.bbar_ybe.ok; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                std::size_t a1 = x, a2 = y, a3 = z;
                Bbar(a1, a2);
                Bbar(a2, a3);
                Bbar(a1, a2);
                std::size_t b1 = x, b2 = y, b3 = z;
                Bbar(b2, b3);
                Bbar(b1, b2);
                Bbar(b2, b3);
                if (a1 != b1 || a2 != b2 || a3 != b3) {
                    rep.bbar_ybe = {false, std::array<std::size_t, 3>{x, y, z}};
                    break;
                }
            }
    for (std::size_t x = 0; x < m && rep.mutually_inverse; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t a1 = x, a2 = y;
            B(a1, a2);
            Bbar(a1, a2);
            std::size_t b1 = x, b2 = y;
            Bbar(b1, b2);
            B(b1, b2);
            if (a1 != x || a2 != y || b1 != x || b2 != y) {
                rep.mutually_inverse = false;
                rep.inverse_witness = std::array<std::size_t, 2>{x, y};
                break;
            }
        }
    LawsReport laws = check_laws(Q);
    rep.bbar_ybe_matches_right_shelf = rep.bbar_ybe.ok == laws.right_shelf.passed();
    rep.inverse_matches_inverse_laws =
        rep.mutually_inverse == (laws.left_inverse.passed() && laws.right_inverse.passed());
    return rep;
}

Vec LinearYB::bracket(std::size_t i, std::size_t j) const {
    Vec r(n0);
    for (std::size_t k = 0; k < n0; ++k) r[k] = c[(i * n0 + j) * n0 + k];
    return r;
}

namespace {

LinearYB build_linear_yb(std::size_t n0, std::vector<Rational> c) {
    // antisymmetry is a precondition of the construction
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k)
                if (c[(i * n0 + j) * n0 + k] != -c[(j * n0 + i) * n0 + k])
                    throw InvalidShape("linear_ybe_operator needs an antisymmetric bracket");
    LinearYB yb;
    yb.n0 = n0;
    yb.N = n0 + 1;
    yb.c = std::move(c);
    const std::size_t N = yb.N;
    yb.B = Matrix::zero(N * N, N * N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            std::size_t col = a * N + b;
            yb.B.at(b * N + a, col) += 1;  // swap part
            if (a > 0 && b > 0) {
                Vec br = yb.bracket(a - 1, b - 1);
                for (std::size_t k = 0; k < n0; ++k)
                    if (br[k] != 0) yb.B.at(0 * N + (k + 1), col) += br[k];
            }
        }
    if (!inverse(yb.B)) throw InternalInconsistency("linear braiding is not invertible");
    return yb;
}

}  // namespace

LinearYB linear_ybe_operator(const LieAlgebra& g) { return build_linear_yb(g.dim, g.c); }

LinearYB linear_ybe_operator(const L2Data& L) { return build_linear_yb(L.n0, L.l2_00); }

Matrix linear_braiding_inverse(const LinearYB& yb) {
    const std::size_t N = yb.N;
    Matrix Binv = Matrix::zero(N * N, N * N);
    // column indexed by (b,y)⊗(a,x) basis element u_b ⊗ u_a
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < N; ++a) {
            std::size_t col = b * N + a;
            Binv.at(a * N + b, col) += 1;
            if (a > 0 && b > 0) {
                Vec br = yb.bracket(a - 1, b - 1);
                for (std::size_t k = 0; k < yb.n0; ++k)
                    if (br[k] != 0) Binv.at((k + 1) * N + 0, col) -= br[k];
            }
        }
    if (!((yb.B * Binv) == Matrix::identity(N * N)) ||
        !((Binv * yb.B) == Matrix::identity(N * N)))
        throw InternalInconsistency("closed-form inverse braiding does not invert B");
    return Binv;
}

namespace {

/// Applies B at tensor slots (pos, pos+1) of an m-fold coordinate vector.
/// Slot 0 is the most significant digit.
Vec apply_pair(const LinearYB& yb, const Vec& v, std::size_t pos, std::size_t m) {
    const std::size_t N = yb.N;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= N;
    std::size_t strideHi = 1;
    for (std::size_t i = pos + 2; i < m; ++i) strideHi *= N;  // digits after the pair
    const std::size_t pairStride = strideHi * N;
    Vec out(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (v[idx] == 0) continue;
        std::size_t b = (idx / strideHi) % N;
        std::size_t a = (idx / pairStride) % N;
        std::size_t base = idx - a * pairStride - b * strideHi;
        out[base + b * pairStride + a * strideHi] += v[idx];
        if (a > 0 && b > 0) {
            Vec br = yb.bracket(a - 1, b - 1);
            for (std::size_t k = 0; k < yb.n0; ++k)
                if (br[k] != 0) out[base + 0 * pairStride + (k + 1) * strideHi] += v[idx] * br[k];
        }
    }
    return out;
}

}  // namespace

LinearYbeResult linear_ybe_check(const LinearYB& yb) {
    const std::size_t N = yb.N;
    const std::size_t total = N * N * N;
    for (std::size_t col = 0; col < total; ++col) {
        Vec e(total);
        e[col] = 1;
        Vec lhs = apply_pair(yb, apply_pair(yb, apply_pair(yb, e, 0, 3), 1, 3), 0, 3);
        Vec rhs = apply_pair(yb, apply_pair(yb, apply_pair(yb, e, 1, 3), 0, 3), 1, 3);
        if (!(lhs == rhs)) return {false, col};
    }
    return {};
}

}  // namespace qlie
