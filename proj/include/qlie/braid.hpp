#pragma once

#include <string>
#include <vector>

#include "qlie/quandle.hpp"

namespace qlie {

/// One generator occurrence: kind 's' (crossing) or 't' (twist), 1-based
/// index, sign +1 or -1. s-indices run 1..strands-1, t-indices 1..strands.
struct BraidLetter {
    char kind = 's';
    std::size_t index = 1;
    int sign = 1;
    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    std::size_t strands = 1;
    std::vector<BraidLetter> letters;
};

/// Grammar: whitespace-separated tokens `s<i>`, `t<i>`, optional suffix
/// `^-1`; e.g. "s1 s2^-1 t3". Errors carry the byte offset of the bad token.
BraidWord parse_word(const std::string& text, std::size_t strands);

/// Letterwise-reversed, sign-flipped inverse word.
BraidWord inverse_word(const BraidWord& w);

using QTuple = std::vector<std::size_t>;

/// Applies the letters left-to-right:
///   s_i:     (.., q_i, q_{i+1}, ..) ↦ (.., q_{i+1}, q_{i+1} ⊳ q_i, ..)
///   s_i^-1:  (.., q_i, q_{i+1}, ..) ↦ (.., q_{i+1} ⊲ q_i, q_i, ..)
///   t_i:     q_i ↦ q_i ⊳ q_i
///   t_i^-1:  q_i ↦ q_i ⊲ q_i
/// Negative letters need the right table (MissingRightTable otherwise).
QTuple act(const BraidWord& w, const Magma2& Q, QTuple tuple);

enum class RelationPreset { BraidGroup, FramedGroup, PositiveMonoid, FramedPositiveMonoid };

RelationPreset relation_preset_from_string(const std::string& name);
std::string to_string(RelationPreset p);

struct RelationFailure {
    std::string relation;  // e.g. "s1 s2 s1 = s2 s1 s2"
    QTuple witness;
};

struct RelationsReport {
    bool ok = true;
    std::size_t relations_checked = 0;
    std::size_t tuples_per_relation = 0;
    std::vector<RelationFailure> failures;  // one (first) witness per relation
};

/// Verifies every defining relation of the chosen presentation pointwise on
/// all of Q^n.
RelationsReport relations_hold(const Magma2& Q, std::size_t n, RelationPreset which);

/// Number of tuples fixed by the action of w: colorings of the braid closure.
std::size_t coloring_count(const BraidWord& w, const Magma2& Q);

}  // namespace qlie
