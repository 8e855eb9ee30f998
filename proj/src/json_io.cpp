#include "qlie/json_io.hpp"

#include <fstream>

namespace qlie {

json rational_to_json(const Rational& q) {
    if (denominator(q) == 1) {
        const Integer& n = numerator(q);
        if (n >= std::numeric_limits<long long>::min() &&
            n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return format_rational(q);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a 'p/q' string for a rational", 0);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows", 0);
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must be arrays of equal length", i);
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

json lie_to_json(const LieAlgebra& L) {
    json c = json::array();
    for (std::size_t i = 0; i < L.dim; ++i) {
        json plane = json::array();
        for (std::size_t jn = 0; jn < L.dim; ++jn) {
            json row = json::array();
            for (std::size_t k = 0; k < L.dim; ++k) row.push_back(rational_to_json(L.c_at(i, jn, k)));
            plane.push_back(std::move(row));
        }
        c.push_back(std::move(plane));
    }
    return json{{"dim", L.dim}, {"c", std::move(c)}};
}

LieAlgebra lie_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("c"))
        throw ParseError("Lie algebra JSON needs 'dim' and 'c'", 0);
    std::size_t n = j["dim"].get<std::size_t>();
    const json& c = j["c"];
    if (!c.is_array() || c.size() != n) throw ParseError("'c' must have dim planes", 0);
    LieAlgebra L(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!c[i].is_array() || c[i].size() != n) throw ParseError("'c' plane has wrong size", i);
        for (std::size_t jn = 0; jn < n; ++jn) {
            if (!c[i][jn].is_array() || c[i][jn].size() != n)
                throw ParseError("'c' row has wrong size", jn);
            for (std::size_t k = 0; k < n; ++k) L.c_at(i, jn, k) = rational_from_json(c[i][jn][k]);
        }
    }
    return L;
}

json rep_to_json(const Representation& R) {
    json rho = json::array();
    for (const auto& m : R.rho) rho.push_back(matrix_to_json(m));
    return json{{"dimV", R.dimV}, {"rho", std::move(rho)}};
}

Representation rep_from_json(const json& j, const LieAlgebra& L) {
    if (!j.is_object() || !j.contains("dimV") || !j.contains("rho"))
        throw ParseError("representation JSON needs 'dimV' and 'rho'", 0);
    Representation R;
    R.algebra = L;
    R.dimV = j["dimV"].get<std::size_t>();
    const json& rho = j["rho"];
    if (!rho.is_array() || rho.size() != L.dim)
        throw ParseError("'rho' must hold one matrix per basis element", 0);
    for (const auto& m : rho) {
        Matrix mat = matrix_from_json(m);
        if (mat.rows() != R.dimV || mat.cols() != R.dimV)
            throw ParseError("rho matrices must be dimV x dimV", 0);
        R.rho.push_back(std::move(mat));
    }
    return R;
}

json cochain_to_json(const Cochain& w) {
    json values = json::array();
    for (const auto& [idx, v] : w.values) {
        json entry;
        entry["idx"] = idx;
        json vv = json::array();
        for (const auto& x : v) vv.push_back(rational_to_json(x));
        entry["v"] = std::move(vv);
        values.push_back(std::move(entry));
    }
    return json{{"degree", w.degree}, {"values", std::move(values)}};
}

Cochain cochain_from_json(const json& j, const LieAlgebra& L, const Representation& R) {
    if (!j.is_object() || !j.contains("degree"))
        throw ParseError("cochain JSON needs 'degree'", 0);
    Cochain w = zero_cochain(L, R, j["degree"].get<std::size_t>());
    if (j.contains("values"))
        for (const auto& entry : j["values"]) {
            std::vector<std::size_t> idx = entry.at("idx").get<std::vector<std::size_t>>();
            if (idx.size() != w.degree) throw ParseError("cochain tuple has wrong length", 0);
            for (std::size_t t = 0; t + 1 < idx.size(); ++t)
                if (idx[t] >= idx[t + 1])
                    throw ParseError("cochain tuples must be strictly increasing", t);
            if (!idx.empty() && idx.back() >= L.dim)
                throw ParseError("cochain tuple index out of range", 0);
            Vec v;
            for (const auto& x : entry.at("v")) v.push_back(rational_from_json(x));
            if (v.size() != R.dimV) throw ParseError("cochain value has wrong length", 0);
            if (!is_zero(v)) w.values[idx] = std::move(v);
        }
    return w;
}

json l2_to_json(const L2Data& L) {
    json l2_00 = json::array();
    for (std::size_t i = 0; i < L.n0; ++i) {
        json plane = json::array();
        for (std::size_t jn = 0; jn < L.n0; ++jn) {
            json row = json::array();
            for (std::size_t k = 0; k < L.n0; ++k)
                row.push_back(rational_to_json(L.l2_00_at(i, jn, k)));
            plane.push_back(std::move(row));
        }
        l2_00.push_back(std::move(plane));
    }
    json l2_01 = json::array();
    for (std::size_t i = 0; i < L.n0; ++i) {
        json plane = json::array();
        for (std::size_t p = 0; p < L.n1; ++p) {
            json row = json::array();
            for (std::size_t q = 0; q < L.n1; ++q)
                row.push_back(rational_to_json(L.l2_01_at(i, p, q)));
            plane.push_back(std::move(row));
        }
        l2_01.push_back(std::move(plane));
    }
    json l3 = json::array();
    for (std::size_t i = 0; i < L.n0; ++i) {
        json a = json::array();
        for (std::size_t jn = 0; jn < L.n0; ++jn) {
            json b = json::array();
            for (std::size_t k = 0; k < L.n0; ++k) {
                json row = json::array();
                for (std::size_t p = 0; p < L.n1; ++p)
                    row.push_back(rational_to_json(L.l3_at(i, jn, k, p)));
                b.push_back(std::move(row));
            }
            a.push_back(std::move(b));
        }
        l3.push_back(std::move(a));
    }
    return json{{"n0", L.n0},           {"n1", L.n1}, {"d", matrix_to_json(L.d)},
                {"l2_00", std::move(l2_00)}, {"l2_01", std::move(l2_01)}, {"l3", std::move(l3)}};
}

L2Data l2_from_json(const json& j) {
    for (const char* key : {"n0", "n1", "d", "l2_00", "l2_01", "l3"})
        if (!j.is_object() || !j.contains(key))
            throw ParseError(std::string("L2Data JSON needs '") + key + "'", 0);
    L2Data L(j["n0"].get<std::size_t>(), j["n1"].get<std::size_t>());
    L.d = matrix_from_json(j["d"]);
    if (L.d.rows() != L.n0 || L.d.cols() != L.n1)
        throw ParseError("'d' must be an n0 x n1 matrix", 0);
    const json& c = j["l2_00"];
    // only canonical slots are read; antisymmetry fills the rest
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t jn = i + 1; jn < L.n0; ++jn)
            for (std::size_t k = 0; k < L.n0; ++k) {
                Rational v = rational_from_json(c.at(i).at(jn).at(k));
                L.l2_00_at(i, jn, k) = v;
                L.l2_00_at(jn, i, k) = -v;
            }
    const json& r = j["l2_01"];
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t p = 0; p < L.n1; ++p)
            for (std::size_t q = 0; q < L.n1; ++q)
                L.l2_01_at(i, p, q) = rational_from_json(r.at(i).at(p).at(q));
    const json& t = j["l3"];
    const int perm[6][4] = {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1},
                            {2, 1, 0, -1}, {2, 0, 1, 1}, {0, 2, 1, -1}};
    for (std::size_t i = 0; i < L.n0; ++i)
        for (std::size_t jn = i + 1; jn < L.n0; ++jn)
            for (std::size_t k = jn + 1; k < L.n0; ++k)
                for (std::size_t p = 0; p < L.n1; ++p) {
                    Rational v = rational_from_json(t.at(i).at(jn).at(k).at(p));
                    std::size_t idx[3] = {i, jn, k};
                    for (const auto& pr : perm)
                        L.l3_at(idx[pr[0]], idx[pr[1]], idx[pr[2]], p) = Rational(pr[3]) * v;
                }
    return L;
}

json magma_to_json(const Magma2& Q) {
    json out{{"size", Q.size}, {"left", Q.left}};
    if (Q.right) out["right"] = *Q.right;
    return out;
}

Magma2 magma_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("left"))
        throw ParseError("quandle JSON needs 'size' and 'left'", 0);
    Magma2 Q;
    Q.size = j["size"].get<std::size_t>();
    Q.left = j["left"].get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("right") && !j["right"].is_null())
        Q.right = j["right"].get<std::vector<std::vector<std::size_t>>>();
    Q.check_wellformed();
    return Q;
}

json group_to_json(const GroupTable& G) { return json{{"size", G.size}, {"mul", G.mul}}; }

GroupTable group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("mul"))
        throw ParseError("group JSON needs 'size' and 'mul'", 0);
    auto mul = j["mul"].get<std::vector<std::vector<std::size_t>>>();
    if (mul.size() != j["size"].get<std::size_t>())
        throw ParseError("group 'mul' has wrong row count", 0);
    return make_group(std::move(mul));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what(), e.byte);
    }
}

}  // namespace qlie
