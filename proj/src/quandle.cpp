#include "qlie/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace qlie {

void Magma2::check_wellformed() const {
    auto check_table = [&](const std::vector<std::vector<std::size_t>>& t, const char* name) {
        if (t.size() != size) throw InvalidTable(std::string(name) + " table has wrong row count");
        for (const auto& row : t) {
            if (row.size() != size) throw InvalidTable(std::string(name) + " table is ragged");
            for (auto v : row)
                if (v >= size) throw InvalidTable(std::string(name) + " table entry out of range");
        }
    };
    if (size == 0) throw InvalidTable("empty carrier");
    check_table(left, "left");
    if (right) check_table(*right, "right");
}

namespace {

using Witness = std::array<std::size_t, 3>;

template <typename F>
LawResult sweep3(std::size_t m, F&& law) {
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (!law(x, y, z)) return {LawStatus::Fail, Witness{x, y, z}};
    return {LawStatus::Pass, std::nullopt};
}

template <typename F>
LawResult sweep2(std::size_t m, F&& law) {
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (!law(x, y)) return {LawStatus::Fail, Witness{x, y, 0}};
    return {LawStatus::Pass, std::nullopt};
}

template <typename F>
LawResult sweep1(std::size_t m, F&& law) {
    for (std::size_t x = 0; x < m; ++x)
        if (!law(x)) return {LawStatus::Fail, Witness{x, 0, 0}};
    return {LawStatus::Pass, std::nullopt};
}

}  // namespace

LawsReport check_laws(const Magma2& Q) {
    Q.check_wellformed();
    const std::size_t m = Q.size;
    LawsReport r;
    r.left_shelf = sweep3(m, [&](std::size_t x, std::size_t y, std::size_t z) {
        return Q.lconj(x, Q.lconj(y, z)) == Q.lconj(Q.lconj(x, y), Q.lconj(x, z));
    });
    r.left_idem = sweep1(m, [&](std::size_t x) { return Q.lconj(x, x) == x; });
    r.left_quasi_idem = sweep2(m, [&](std::size_t x, std::size_t y) {
        return Q.lconj(Q.lconj(x, x), y) == Q.lconj(x, y);
    });
    if (!Q.has_right()) {
        LawResult na{LawStatus::NotApplicable, std::nullopt};
        r.right_shelf = r.right_inverse = r.left_inverse = r.right_idem = r.right_quasi_idem =
            r.mixed_dist_left = r.mixed_dist_right = na;
        return r;
    }
    r.right_shelf = sweep3(m, [&](std::size_t x, std::size_t y, std::size_t z) {
        return Q.rconj(Q.rconj(x, y), z) == Q.rconj(Q.rconj(x, z), Q.rconj(y, z));
    });
    r.right_inverse = sweep2(m, [&](std::size_t x, std::size_t y) {
        return Q.rconj(Q.lconj(x, y), x) == y;
    });
    r.left_inverse = sweep2(m, [&](std::size_t x, std::size_t y) {
        return Q.lconj(x, Q.rconj(y, x)) == y;
    });
    r.right_idem = sweep1(m, [&](std::size_t x) { return Q.rconj(x, x) == x; });
    r.right_quasi_idem = sweep2(m, [&](std::size_t x, std::size_t y) {
        return Q.rconj(y, Q.rconj(x, x)) == Q.rconj(y, x);
    });
    r.mixed_dist_left = sweep3(m, [&](std::size_t x, std::size_t y, std::size_t z) {
        return Q.lconj(x, Q.rconj(y, z)) == Q.rconj(Q.lconj(x, y), Q.lconj(x, z));
    });
    r.mixed_dist_right = sweep3(m, [&](std::size_t x, std::size_t y, std::size_t z) {
        return Q.rconj(Q.lconj(x, y), z) == Q.lconj(Q.rconj(x, z), Q.rconj(y, z));
    });
    return r;
}

GroupTable make_group(std::vector<std::vector<std::size_t>> mul) {
    GroupTable G;
    G.size = mul.size();
    G.mul = std::move(mul);
    if (G.size == 0) throw InvalidTable("empty group table");
    for (const auto& row : G.mul) {
        if (row.size() != G.size) throw InvalidTable("group table is ragged");
        for (auto v : row)
            if (v >= G.size) throw InvalidTable("group table entry out of range");
    }
    // find the two-sided identity
    bool found = false;
    for (std::size_t e = 0; e < G.size && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < G.size; ++x)
            if (G.mul[e][x] != x || G.mul[x][e] != x) {
                ok = false;
                break;
            }
        if (ok) {
            G.identity = e;
            found = true;
        }
    }
    if (!found) throw InvalidTable("group table has no identity");
    G.inverse.assign(G.size, 0);
    for (std::size_t x = 0; x < G.size; ++x) {
        bool ok = false;
        for (std::size_t y = 0; y < G.size; ++y)
            if (G.mul[x][y] == G.identity && G.mul[y][x] == G.identity) {
                G.inverse[x] = y;
                ok = true;
                break;
            }
        if (!ok) throw InvalidTable("group table element has no inverse");
    }
    for (std::size_t x = 0; x < G.size; ++x)
        for (std::size_t y = 0; y < G.size; ++y)
            for (std::size_t z = 0; z < G.size; ++z)
                if (G.mul[G.mul[x][y]][z] != G.mul[x][G.mul[y][z]])
                    throw InvalidTable("group table is not associative");
    return G;
}

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw InvalidTable("cyclic group needs n >= 1");
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) mul[x][y] = (x + y) % n;
    return make_group(std::move(mul));
}

GroupTable symmetric_group(std::size_t n) {
    if (n == 0 || n > 5) throw InvalidTable("symmetric_group supports 1 <= n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
    auto find = [&](const std::vector<std::size_t>& q) {
        return std::size_t(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // (a*b)(i) = a(b(i))
            std::vector<std::size_t> q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
            mul[a][b] = find(q);
        }
    return make_group(std::move(mul));
}

Magma2 conj_quandle(const GroupTable& G, unsigned n) {
    if (n == 0) throw InvalidTable("conj_quandle needs n >= 1");
    const std::size_t m = G.size;
    auto pow = [&](std::size_t x, unsigned k) {
        std::size_t r = G.identity;
        for (unsigned t = 0; t < k; ++t) r = G.mul[r][x];
        return r;
    };
    Magma2 Q;
    Q.size = m;
    Q.left.assign(m, std::vector<std::size_t>(m));
    Q.right.emplace(m, std::vector<std::size_t>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t xn = pow(x, n), yn = pow(y, n);
            Q.left[x][y] = G.mul[G.mul[xn][y]][G.inverse[xn]];
            (*Q.right)[x][y] = G.mul[G.mul[G.inverse[yn]][x]][yn];
        }
    return Q;
}

Magma2 cyclic_rack(std::size_t n) {
    if (n == 0) throw InvalidTable("cyclic_rack needs n >= 1");
    Magma2 Q;
    Q.size = n;
    Q.left.assign(n, std::vector<std::size_t>(n));
    Q.right.emplace(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Q.left[x][y] = (y + 1) % n;
            (*Q.right)[x][y] = (x + n - 1) % n;
        }
    return Q;
}

Magma2 reflection_quandle(std::size_t m) {
    if (m == 0) throw InvalidTable("reflection_quandle needs m >= 1");
    Magma2 Q;
    Q.size = m;
    Q.left.assign(m, std::vector<std::size_t>(m));
    Q.right.emplace(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Q.left[a][b] = (2 * a % m + m - b % m) % m;
            (*Q.right)[a][b] = (2 * b % m + m - a % m) % m;
        }
    return Q;
}

std::optional<Magma2> derive_right_from_left(const Magma2& Q) {
    Q.check_wellformed();
    if (!check_laws(Q).left_shelf.passed())
        throw InvalidTable("derive_right_from_left needs the left distributive law");
    const std::size_t m = Q.size;
    Magma2 R = Q;
    R.right.emplace(m, std::vector<std::size_t>(m, m));
    for (std::size_t x = 0; x < m; ++x) {
        std::vector<bool> seen(m, false);
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t v = Q.lconj(x, y);
            if (seen[v]) return std::nullopt;  // x ⊳ - is not injective
            seen[v] = true;
            (*R.right)[v][x] = y;  // (x ⊳ y) ⊲ x = y
        }
    }
    return R;
}

}  // namespace qlie
