#include "doctest.h"
#include "qlie/braid.hpp"
#include "test_helpers.hpp"

using namespace qlie;

TEST_CASE("parse_word") {
    BraidWord w = parse_word("s1 s2 s1", 3);
    CHECK(w.letters.size() == 3);
    for (const auto& l : w.letters) {
        CHECK(l.kind == 's');
        CHECK(l.sign == 1);
    }

    BraidWord t = parse_word("t2^-1", 2);
    REQUIRE(t.letters.size() == 1);
    CHECK(t.letters[0].kind == 't');
    CHECK(t.letters[0].index == 2);
    CHECK(t.letters[0].sign == -1);

    CHECK(parse_word("", 4).letters.empty());
    CHECK(parse_word("  s1   t4  ", 4).letters.size() == 2);

    CHECK_THROWS_AS(parse_word("s3", 3), ParseError);   // s-index <= n-1
    CHECK_THROWS_AS(parse_word("t4", 3), ParseError);   // t-index <= n
    CHECK_THROWS_AS(parse_word("x1", 3), ParseError);
    CHECK_THROWS_AS(parse_word("s", 3), ParseError);
    CHECK_THROWS_AS(parse_word("s1^2", 3), ParseError);
    try {
        parse_word("s1 q2", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);  // byte offset of the bad token
    }
}

TEST_CASE("act: basic formulas") {
    Magma2 R5 = reflection_quandle(5);
    // s1 on (1,3): (3, 3 ⊳ 1) = (3, 2*3-1 mod 5) = (3, 0)
    QTuple out = act(parse_word("s1", 2), R5, {1, 3});
    CHECK(out == QTuple{3, 0});

    // empty word: identity
    Magma2 S3c = conj_quandle(symmetric_group(3));
    QTuple t{0, 3, 5};
    CHECK(act(parse_word("", 3), S3c, t) == t);

    // s1 s1^-1 is the identity on a quandle
    testing::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QTuple q{rng.below(6), rng.below(6)};
        CHECK(act(parse_word("s1 s1^-1", 2), S3c, q) == q);
    }

    // t_i acts by x ↦ x ⊳ x
    Magma2 C4 = cyclic_rack(4);
    CHECK(act(parse_word("t1", 2), C4, {2, 0}) == QTuple{3, 0});

    // negative letters need the right table
    Magma2 leftOnly = C4;
    leftOnly.right.reset();
    CHECK_THROWS_AS(act(parse_word("s1^-1", 2), leftOnly, {0, 1}), MissingRightTable);
}

TEST_CASE("word inverse undoes the action on racks") {
    testing::Rng rng(4321);
    for (const Magma2& Q : {conj_quandle(symmetric_group(3)), cyclic_rack(4)}) {
        for (int trial = 0; trial < 25; ++trial) {
            BraidWord w;
            w.strands = 3;
            for (int k = 0; k < 6; ++k) {
                bool tw = rng.below(4) == 0;
                w.letters.push_back(BraidLetter{tw ? 't' : 's',
                                                1 + rng.below(tw ? 3 : 2),
                                                rng.below(2) == 0 ? 1 : -1});
            }
            BraidWord round = w;
            BraidWord inv = inverse_word(w);
            round.letters.insert(round.letters.end(), inv.letters.begin(), inv.letters.end());
            QTuple t{rng.below(Q.size), rng.below(Q.size), rng.below(Q.size)};
            CHECK(act(round, Q, t) == t);
        }
    }
}

TEST_CASE("relations: quandle gives a braid group action") {
    Magma2 Q = conj_quandle(symmetric_group(3));
    RelationsReport r = relations_hold(Q, 3, RelationPreset::BraidGroup);
    CHECK(r.ok);
    CHECK(r.tuples_per_relation == 216);
    CHECK(relations_hold(Q, 3, RelationPreset::FramedGroup).ok);
    CHECK(relations_hold(Q, 4, RelationPreset::BraidGroup).ok);
}

TEST_CASE("relations: rack gives a framed action but twists are not trivial") {
    Magma2 C = cyclic_rack(4);
    CHECK(relations_hold(C, 3, RelationPreset::FramedGroup).ok);
    RelationsReport r = relations_hold(C, 3, RelationPreset::BraidGroup);
    CHECK(!r.ok);
    for (const auto& f : r.failures) {
        // every failure is a t_i-identity relation
        CHECK(f.relation.find("t") != std::string::npos);
        CHECK(f.relation.find("= 1") != std::string::npos);
    }
    CHECK(!r.failures.empty());
}

TEST_CASE("relations: left-only spindle gives a positive monoid action") {
    Magma2 P;
    P.size = 2;
    P.left = {{0, 0}, {1, 1}};  // x ⊳ y = x: a spindle that is not a quandle
    LawsReport laws = check_laws(P);
    CHECK(laws.is_spindle());
    CHECK(relations_hold(P, 3, RelationPreset::PositiveMonoid).ok);
}

TEST_CASE("relations: non-shelf fails the braid relation") {
    Magma2 X;
    X.size = 2;
    X.left = {{0, 1}, {1, 0}};  // x ⊳ y = x+y: not left distributive
    RelationsReport r = relations_hold(X, 3, RelationPreset::PositiveMonoid);
    CHECK(!r.ok);
    bool braid_failed = false;
    for (const auto& f : r.failures)
        if (f.relation == "s1 s2 s1 = s2 s1 s2") braid_failed = true;
    CHECK(braid_failed);
}

TEST_CASE("theorem-squares converse: framed positive monoid forces quasi-idempotent shelf") {
    // exhaustively over all 16 left tables on 2 elements
    for (std::size_t coded = 0; coded < 16; ++coded) {
        std::size_t c = coded;
        Magma2 Q;
        Q.size = 2;
        Q.left.assign(2, std::vector<std::size_t>(2));
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
                Q.left[x][y] = c % 2;
                c /= 2;
            }
        LawsReport laws = check_laws(Q);
        RelationsReport fp = relations_hold(Q, 3, RelationPreset::FramedPositiveMonoid);
        CHECK(fp.ok == laws.is_quasi_idempotent_shelf());
        RelationsReport pm = relations_hold(Q, 3, RelationPreset::PositiveMonoid);
        CHECK(pm.ok == laws.is_spindle());
    }
}

TEST_CASE("coloring counts") {
    Magma2 Q = conj_quandle(symmetric_group(3));
    // the empty word fixes everything
    CHECK(coloring_count(parse_word("", 2), Q) == 36);
    // s1 fixes exactly the diagonal
    CHECK(coloring_count(parse_word("s1", 2), Q) == 6);
}

TEST_CASE("coloring count is conjugation invariant") {
    testing::Rng rng(20240209);
    Magma2 Q = conj_quandle(symmetric_group(3));
    BraidWord w = parse_word("s1 s1 s2^-1", 3);
    std::size_t base = coloring_count(w, Q);
    for (int trial = 0; trial < 20; ++trial) {
        BraidWord g;
        g.strands = 3;
        for (int k = 0; k < 4; ++k)
            g.letters.push_back(BraidLetter{'s', 1 + rng.below(2), rng.below(2) == 0 ? 1 : -1});
        BraidWord conj = g;
        conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
        BraidWord ginv = inverse_word(g);
        conj.letters.insert(conj.letters.end(), ginv.letters.begin(), ginv.letters.end());
        CHECK(coloring_count(conj, Q) == base);
    }
}

TEST_CASE("coloring count is invariant under defining relations") {
    Magma2 Q = conj_quandle(symmetric_group(3));
    CHECK(coloring_count(parse_word("s1 s2 s1", 3), Q) ==
          coloring_count(parse_word("s2 s1 s2", 3), Q));
    CHECK(coloring_count(parse_word("s1 t1 s2", 3), Q) ==
          coloring_count(parse_word("s1 s2", 3), Q));
    CHECK(coloring_count(parse_word("s1 s1^-1 s2", 3), Q) ==
          coloring_count(parse_word("s2", 3), Q));
}
