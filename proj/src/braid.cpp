#include "qlie/braid.hpp"

namespace qlie {

BraidWord parse_word(const std::string& text, std::size_t strands) {
    if (strands == 0) throw ParseError("strand count must be >= 1", 0);
    BraidWord w;
    w.strands = strands;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        std::size_t end = pos;
        while (end < n && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string tok = text.substr(start, end - start);
        BraidLetter letter;
        if (tok[0] == 's')
            letter.kind = 's';
        else if (tok[0] == 't')
            letter.kind = 't';
        else
            throw ParseError("expected generator 's<i>' or 't<i>'", start);
        std::size_t i = 1;
        if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("generator needs a numeric index", start + i);
        std::size_t idx = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            idx = idx * 10 + (tok[i] - '0');
            ++i;
        }
        letter.index = idx;
        if (i < tok.size()) {
            if (tok.substr(i) != "^-1") throw ParseError("bad generator suffix", start + i);
            letter.sign = -1;
        }
        if (letter.index == 0) throw ParseError("generator index must be >= 1", start + 1);
        if (letter.kind == 's' && letter.index > strands - 1)
            throw ParseError("s-index must be <= strands-1", start + 1);
        if (letter.kind == 't' && letter.index > strands)
            throw ParseError("t-index must be <= strands", start + 1);
        w.letters.push_back(letter);
        pos = end;
    }
    return w;
}

BraidWord inverse_word(const BraidWord& w) {
    BraidWord inv;
    inv.strands = w.strands;
    inv.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        inv.letters.push_back(BraidLetter{it->kind, it->index, -it->sign});
    return inv;
}

QTuple act(const BraidWord& w, const Magma2& Q, QTuple tuple) {
    if (tuple.size() != w.strands) throw InvalidShape("tuple length must equal strand count");
    for (auto q : tuple)
        if (q >= Q.size) throw IndexError("tuple entry out of carrier range");
    for (const auto& l : w.letters) {
        if (l.sign < 0 && !Q.has_right())
            throw MissingRightTable("negative generators need the right-conjugation table");
        std::size_t i = l.index - 1;
        if (l.kind == 's') {
            std::size_t a = tuple[i], b = tuple[i + 1];
            if (l.sign > 0) {
                tuple[i] = b;
                tuple[i + 1] = Q.lconj(b, a);
            } else {
                tuple[i] = Q.rconj(b, a);
                tuple[i + 1] = a;
            }
        } else {
            tuple[i] = l.sign > 0 ? Q.lconj(tuple[i], tuple[i]) : Q.rconj(tuple[i], tuple[i]);
        }
    }
    return tuple;
}

RelationPreset relation_preset_from_string(const std::string& name) {
    if (name == "braid_group") return RelationPreset::BraidGroup;
    if (name == "framed_group") return RelationPreset::FramedGroup;
    if (name == "positive_monoid") return RelationPreset::PositiveMonoid;
    if (name == "framed_positive_monoid") return RelationPreset::FramedPositiveMonoid;
    throw ParseError("unknown relation preset '" + name + "'", 0);
}

std::string to_string(RelationPreset p) {
    switch (p) {
        case RelationPreset::BraidGroup: return "braid_group";
        case RelationPreset::FramedGroup: return "framed_group";
        case RelationPreset::PositiveMonoid: return "positive_monoid";
        case RelationPreset::FramedPositiveMonoid: return "framed_positive_monoid";
    }
    return "?";
}

namespace {

struct Relation {
    std::string name;
    BraidWord lhs, rhs;
};

BraidWord word_of(std::size_t strands, std::initializer_list<BraidLetter> ls) {
    BraidWord w;
    w.strands = strands;
    w.letters = ls;
    return w;
}

BraidLetter S(std::size_t i, int sign = 1) { return BraidLetter{'s', i, sign}; }
BraidLetter T(std::size_t i, int sign = 1) { return BraidLetter{'t', i, sign}; }

std::string show(const BraidWord& w) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        s += l.kind + std::to_string(l.index) + (l.sign < 0 ? "^-1" : "");
    }
    return s;
}

std::vector<Relation> preset_relations(std::size_t n, RelationPreset which) {
    std::vector<Relation> rels;
    auto add = [&](BraidWord lhs, BraidWord rhs) {
        rels.push_back(Relation{show(lhs) + " = " + show(rhs), std::move(lhs), std::move(rhs)});
    };
    const bool framed =
        which == RelationPreset::FramedGroup || which == RelationPreset::FramedPositiveMonoid;
    const bool group =
        which == RelationPreset::BraidGroup || which == RelationPreset::FramedGroup;

    // braid relations
    for (std::size_t i = 1; i + 1 <= n - 1; ++i)
        add(word_of(n, {S(i), S(i + 1), S(i)}), word_of(n, {S(i + 1), S(i), S(i + 1)}));
    for (std::size_t i = 1; i <= n - 1; ++i)
        for (std::size_t j = i + 2; j <= n - 1; ++j)
            add(word_of(n, {S(i), S(j)}), word_of(n, {S(j), S(i)}));

    if (framed) {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                add(word_of(n, {T(i), T(j)}), word_of(n, {T(j), T(i)}));
        // t_i s_j = s_j t_i when i >= j+2 or i < j
        for (std::size_t j = 1; j <= n - 1; ++j)
            for (std::size_t i = 1; i <= n; ++i)
                if (i >= j + 2 || i < j)
                    add(word_of(n, {T(i), S(j)}), word_of(n, {S(j), T(i)}));
        for (std::size_t i = 1; i <= n - 1; ++i) {
            add(word_of(n, {T(i + 1), S(i)}), word_of(n, {S(i), T(i)}));
            add(word_of(n, {T(i), S(i)}), word_of(n, {S(i), T(i + 1)}));
        }
    } else {
        // unframed: every twist acts as the identity
        for (std::size_t i = 1; i <= n; ++i) add(word_of(n, {T(i)}), word_of(n, {}));
        if (group)
            for (std::size_t i = 1; i <= n; ++i) add(word_of(n, {T(i, -1)}), word_of(n, {}));
    }

    if (group) {
        for (std::size_t i = 1; i <= n - 1; ++i) {
            add(word_of(n, {S(i), S(i, -1)}), word_of(n, {}));
            add(word_of(n, {S(i, -1), S(i)}), word_of(n, {}));
        }
        if (framed)
            for (std::size_t i = 1; i <= n; ++i) {
                add(word_of(n, {T(i), T(i, -1)}), word_of(n, {}));
                add(word_of(n, {T(i, -1), T(i)}), word_of(n, {}));
            }
    }
    return rels;
}

}  // namespace

RelationsReport relations_hold(const Magma2& Q, std::size_t n, RelationPreset which) {
    Q.check_wellformed();
    if (n < 2) throw InvalidShape("relations need at least 2 strands");
    auto rels = preset_relations(n, which);
    RelationsReport rep;
    rep.relations_checked = rels.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= Q.size;
    rep.tuples_per_relation = total;
    for (const auto& rel : rels) {
        QTuple t(n, 0);
        for (std::size_t w = 0; w < total; ++w) {
            std::size_t code = w;
            for (std::size_t i = 0; i < n; ++i) {
                t[i] = code % Q.size;
                code /= Q.size;
            }
            if (!(act(rel.lhs, Q, t) == act(rel.rhs, Q, t))) {
                rep.ok = false;
                rep.failures.push_back(RelationFailure{rel.name, t});
                break;
            }
        }
    }
    return rep;
}

std::size_t coloring_count(const BraidWord& w, const Magma2& Q) {
    Q.check_wellformed();
    std::size_t total = 1;
    for (std::size_t i = 0; i < w.strands; ++i) total *= Q.size;
    std::size_t count = 0;
    QTuple t(w.strands, 0);
    for (std::size_t z = 0; z < total; ++z) {
        std::size_t code = z;
        for (std::size_t i = 0; i < w.strands; ++i) {
            t[i] = code % Q.size;
            code /= Q.size;
        }
        if (act(w, Q, t) == t) ++count;
    }
    return count;
}

}  // namespace qlie
