#include "qlie/env.hpp"

#include <algorithm>

namespace qlie {

unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (auto a : m) d += a;
    return d;
}

unsigned EnvElement::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m));
    return d;
}

EnvElement env_zero(const LieAlgebra& g, unsigned cap) {
    EnvElement x;
    x.algebra = g;
    x.cap = cap;
    return x;
}

EnvElement env_one(const LieAlgebra& g, unsigned cap) {
    EnvElement x = env_zero(g, cap);
    x.terms.emplace(Mono(g.dim, 0), Rational(1));
    return x;
}

EnvElement env_generator(const LieAlgebra& g, unsigned cap, std::size_t i) {
    if (i >= g.dim) throw IndexError("generator index out of range");
    if (cap < 1) throw CapExceeded(cap);
    EnvElement x = env_zero(g, cap);
    Mono m(g.dim, 0);
    m[i] = 1;
    x.terms.emplace(std::move(m), Rational(1));
    return x;
}

EnvElement env_scale(const Rational& c, EnvElement x) {
    if (c == 0) return env_zero(x.algebra, x.cap);
    for (auto& [m, v] : x.terms) v *= c;
    return x;
}

EnvElement env_add(EnvElement x, const EnvElement& y) {
    for (const auto& [m, c] : y.terms) {
        auto it = x.terms.find(m);
        if (it == x.terms.end())
            x.terms.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) x.terms.erase(it);
        }
    }
    return x;
}

EnvElement env_sub(EnvElement x, const EnvElement& y) {
    return env_add(std::move(x), env_scale(-1, y));
}

namespace {

using Word = std::vector<std::size_t>;  // generator letters, left to right

Mono word_to_mono(std::size_t dim, const Word& w) {
    Mono m(dim, 0);
    for (auto l : w) ++m[l];
    return m;
}

Word mono_to_word(const Mono& m) {
    Word w;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) w.push_back(i);
    return w;
}

/// acc += coeff * (straightened word). Recursion replaces the leftmost
/// descent e_b e_a (b > a) by e_a e_b - [e_a, e_b]; the bracket term is
/// shorter, so this terminates.
void straighten(const LieAlgebra& g, Word w, const Rational& coeff,
                std::map<Mono, Rational>& acc) {
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        if (w[t] <= w[t + 1]) continue;
        std::size_t b = w[t], a = w[t + 1];
        Word swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        straighten(g, std::move(swapped), coeff, acc);
        for (std::size_t k = 0; k < g.dim; ++k) {
            const Rational& cab = g.c_at(a, b, k);
            if (cab == 0) continue;
            Word shorter;
            shorter.reserve(w.size() - 1);
            for (std::size_t s = 0; s < w.size(); ++s) {
                if (s == t) shorter.push_back(k);
                if (s != t && s != t + 1) shorter.push_back(w[s]);
            }
            straighten(g, std::move(shorter), -coeff * cab, acc);
        }
        return;
    }
    Mono m = word_to_mono(g.dim, w);
    auto it = acc.find(m);
    if (it == acc.end())
        acc.emplace(std::move(m), coeff);
    else {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

void check_same_algebra(const EnvElement& x, const EnvElement& y) {
    if (!(x.algebra == y.algebra) || x.cap != y.cap)
        throw Incompatible("enveloping-algebra elements over different data");
}

}  // namespace

EnvElement pbw_multiply(const EnvElement& x, const EnvElement& y) {
    check_same_algebra(x, y);
    EnvElement out = env_zero(x.algebra, x.cap);
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            if (mono_degree(mx) + mono_degree(my) > x.cap) throw CapExceeded(x.cap);
            Word w = mono_to_word(mx);
            Word wy = mono_to_word(my);
            w.insert(w.end(), wy.begin(), wy.end());
            straighten(x.algebra, std::move(w), cx * cy, out.terms);
        }
    return out;
}

namespace {

Rational binomial(unsigned n, unsigned k) {
    Rational r = 1;
    for (unsigned t = 0; t < k; ++t) r = r * Rational(n - t) / Rational(t + 1);
    return r;
}

}  // namespace

EnvTensor coproduct(const EnvElement& x) {
    EnvTensor out;
    out.algebra = x.algebra;
    out.cap = x.cap;
    const std::size_t dim = x.algebra.dim;
    for (const auto& [m, c] : x.terms) {
        // iterate over all splits 0 <= b <= m componentwise
        Mono b(dim, 0);
        while (true) {
            Rational coeff = c;
            Mono rest(dim, 0);
            for (std::size_t i = 0; i < dim; ++i) {
                coeff *= binomial(m[i], b[i]);
                rest[i] = m[i] - b[i];
            }
            auto key = std::make_pair(b, rest);
            auto it = out.terms.find(key);
            if (it == out.terms.end())
                out.terms.emplace(std::move(key), coeff);
            else {
                it->second += coeff;
                if (it->second == 0) out.terms.erase(it);
            }
            // increment the split odometer
            std::size_t i = 0;
            while (i < dim && b[i] == m[i]) {
                b[i] = 0;
                ++i;
            }
            if (i == dim) break;
            ++b[i];
        }
    }
    return out;
}

Rational counit(const EnvElement& x) {
    auto it = x.terms.find(Mono(x.algebra.dim, 0));
    return it == x.terms.end() ? Rational(0) : it->second;
}

EnvElement antipode(const EnvElement& x) {
    EnvElement out = env_zero(x.algebra, x.cap);
    for (const auto& [m, c] : x.terms) {
        Word w = mono_to_word(m);
        std::reverse(w.begin(), w.end());
        Rational sign = (w.size() % 2 == 0) ? c : -c;
        straighten(x.algebra, std::move(w), sign, out.terms);
    }
    return out;
}

EnvElement conjugate(const EnvElement& x, const EnvElement& y) {
    check_same_algebra(x, y);
    EnvTensor dx = coproduct(x);
    EnvElement out = env_zero(x.algebra, x.cap);
    for (const auto& [pair, c] : dx.terms) {
        EnvElement x1 = env_zero(x.algebra, x.cap);
        x1.terms.emplace(pair.first, c);
        EnvElement x2 = env_zero(x.algebra, x.cap);
        x2.terms.emplace(pair.second, Rational(1));
        out = env_add(std::move(out), pbw_multiply(pbw_multiply(x1, y), antipode(x2)));
    }
    return out;
}

namespace {

/// Basis monomials of degree <= maxdeg, ordered by degree then lexicographic.
std::vector<Mono> basis_monomials(std::size_t dim, unsigned maxdeg) {
    std::vector<std::vector<Mono>> bydeg(maxdeg + 1);
    Mono m(dim, 0);
    while (true) {
        unsigned d = mono_degree(m);
        if (d <= maxdeg) bydeg[d].push_back(m);
        // odometer bounded by total degree maxdeg: increment lexicographically
        std::size_t i = 0;
        while (i < dim) {
            ++m[i];
            if (mono_degree(m) <= maxdeg) break;
            m[i] = 0;
            ++i;
        }
        if (i == dim) break;
    }
    std::vector<Mono> out;
    for (auto& v : bydeg)
        for (auto& x : v) out.push_back(std::move(x));
    return out;
}

EnvElement from_mono(const LieAlgebra& g, unsigned cap, const Mono& m) {
    EnvElement x = env_zero(g, cap);
    x.terms.emplace(m, Rational(1));
    return x;
}

}  // namespace

SpindleReport spindle_axioms_check(const LieAlgebra& g, unsigned D) {
    if (D < 3) throw CapExceeded(D);  // distributivity on primitives needs D >= 3
    SpindleReport rep;
    EnvElement one = env_one(g, D);
    auto monos = basis_monomials(g.dim, D);

    for (const auto& m : monos) {
        EnvElement x = from_mono(g, D, m);
        ++rep.checked;
        if (rep.unital_left.holds && !(conjugate(one, x) == x))
            rep.unital_left = {false, {m}};
        if (rep.unital_right.holds &&
            !(conjugate(x, one) == env_scale(counit(x), env_one(g, D))))
            rep.unital_right = {false, {m}};
        // idempotence: Σ x₍₁₎ ⊳ x₍₂₎ = x
        if (rep.idempotent.holds) {
            EnvTensor dx = coproduct(x);
            EnvElement sum = env_zero(g, D);
            for (const auto& [pair, c] : dx.terms) {
                EnvElement x1 = from_mono(g, D, pair.first);
                EnvElement x2 = from_mono(g, D, pair.second);
                sum = env_add(std::move(sum), env_scale(c, conjugate(x1, x2)));
            }
            if (!(sum == x)) rep.idempotent = {false, {m}};
        }
    }

    // left distributive law, on argument triples that fit within the cap
    for (const auto& mx : monos)
        for (const auto& my : monos)
            for (const auto& mz : monos) {
                if (mono_degree(mx) + mono_degree(my) + mono_degree(mz) > D) {
                    ++rep.skipped;
                    continue;
                }
                if (!rep.distributive.holds) continue;
                ++rep.checked;
                EnvElement x = from_mono(g, D, mx), y = from_mono(g, D, my),
                           z = from_mono(g, D, mz);
                EnvElement lhs = conjugate(x, conjugate(y, z));
                EnvTensor dx = coproduct(x);
                EnvElement rhs = env_zero(g, D);
                for (const auto& [pair, c] : dx.terms) {
                    EnvElement x1 = from_mono(g, D, pair.first);
                    EnvElement x2 = from_mono(g, D, pair.second);
                    rhs = env_add(std::move(rhs),
                                  env_scale(c, conjugate(conjugate(x1, y), conjugate(x2, z))));
                }
                if (!(lhs == rhs)) rep.distributive = {false, {mx, my, mz}};
            }
    return rep;
}

LieAlgebra recover_bracket(const LieAlgebra& g, unsigned D) {
    if (D < 2) throw CapExceeded(D);
    if (!validate_lie_algebra(g).ok())
        throw NotALieAlgebra("recover_bracket needs a valid Lie algebra");
    const std::size_t n = g.dim;
    LieAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // antisymmetry via e_i ⊳ e_i = 0
        EnvElement ei = env_generator(g, D, i);
        if (!conjugate(ei, ei).is_zero())
            throw TheoremViolation("e_i ⊳ e_i does not vanish");
        for (std::size_t j = 0; j < n; ++j) {
            EnvElement v = conjugate(ei, env_generator(g, D, j));
            for (const auto& [m, c] : v.terms) {
                unsigned d = mono_degree(m);
                if (d != 1)
                    throw TheoremViolation("e_i ⊳ e_j has a component outside degree 1");
                for (std::size_t k = 0; k < n; ++k)
                    if (m[k] == 1) out.c_at(i, j, k) = c;
            }
        }
    }
    if (!(out.c == g.c))
        throw TheoremViolation("recovered structure constants differ from the input");
    // derivation identity u ⊳ (v ⊳ w) = (u ⊳ v) ⊳ w + v ⊳ (u ⊳ w)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                EnvElement u = env_generator(g, D, i), v = env_generator(g, D, j),
                           w = env_generator(g, D, k);
                EnvElement lhs = conjugate(u, conjugate(v, w));
                EnvElement rhs = env_add(conjugate(conjugate(u, v), w),
                                         conjugate(v, conjugate(u, w)));
                if (!(lhs == rhs)) throw TheoremViolation("derivation identity fails");
            }
    return out;
}

std::string format_env(const EnvElement& x) {
    if (x.terms.empty()) return "0";
    auto monos = basis_monomials(x.algebra.dim, x.degree());
    std::string out;
    for (const auto& m : monos) {
        auto it = x.terms.find(m);
        if (it == x.terms.end()) continue;
        if (!out.empty()) out += " + ";
        out += format_rational(it->second);
        if (mono_degree(m) > 0) {
            out += " *";
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                out += " e" + std::to_string(i + 1);
                if (m[i] > 1) out += "^" + std::to_string(m[i]);
            }
        }
    }
    return out;
}

}  // namespace qlie
