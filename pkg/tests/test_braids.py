"""Braid words, the rank-4 letter action, lifts, and the relation suites."""

from __future__ import annotations

import random

import pytest

from ranktwo.braids import (
    SUITE_NAMES,
    BraidWord,
    ExtBraid,
    acts_by_inner,
    artin_action,
    braid_equal,
    delta,
    embed_sturmian,
    eq_mod_center,
    f2_action,
    f2_action_ext,
    from_aut_generator,
    gl2_image,
    omega,
    relation_suite,
    to_b3,
)
from ranktwo.morphisms import (
    F2Morphism,
    Mat2,
    eval_sturmian,
    generator,
    generator_inverse,
    parse_sturmian,
)
from ranktwo.words import FreeWord, RankedWord

# Defining relators of the 4-strand group, used to scramble words without
# changing the element they represent.
_RELATORS_4 = (
    (1, 2, 1, -2, -1, -2),
    (2, 3, 2, -3, -2, -3),
    (1, 3, -1, -3),
)


def _scramble(rng: random.Random, letters: tuple[int, ...], rounds: int) -> BraidWord:
    letters = list(letters)
    for _ in range(rounds):
        rel = list(rng.choice(_RELATORS_4))
        if rng.random() < 0.5:
            rel = [-l for l in reversed(rel)]
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = rel
        if rng.random() < 0.5:
            g = rng.choice((1, 2, 3, -1, -2, -3))
            pos = rng.randint(0, len(letters))
            letters[pos:pos] = (g, -g)
    return BraidWord(4, tuple(letters))


def test_validation():
    with pytest.raises(ValueError):
        BraidWord(5)
    with pytest.raises(ValueError):
        BraidWord(4, (0,))
    with pytest.raises(ValueError):
        BraidWord(4, (5,))
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    BraidWord(3, (1, 2, -1))
    BraidWord(4, (4, -4))


def test_parse_and_str():
    w = BraidWord.parse("1 -2 3")
    assert w.letters == (1, -2, 3)
    assert str(w) == "1 -2 3"
    assert str(BraidWord(4)) == ""
    assert BraidWord.parse("") == BraidWord(4)
    assert BraidWord.parse("1 2", strands=3).strands == 3
    with pytest.raises(ValueError):
        BraidWord.parse("1 x")


def test_group_operations():
    w = BraidWord.parse("1 -2")
    assert (w * BraidWord.parse("3")).letters == (1, -2, 3)
    assert w.inverse().letters == (2, -1)
    assert (w ** 2).letters == (1, -2, 1, -2)
    assert (w ** -1) == w.inverse()
    assert w ** 0 == BraidWord(4)
    with pytest.raises(ValueError):
        w * BraidWord.parse("1", strands=3)


def test_expand_fourth_generator():
    assert BraidWord(4, (4,)).expand().letters == (-3, -2, 1, 2, 3)
    assert BraidWord(4, (-4,)).expand().letters == (-3, -2, -1, 2, 3)
    assert BraidWord(4, (1, 4)).expand().letters == (1, -3, -2, 1, 2, 3)
    assert BraidWord(3, (1, 2)).expand().letters == (1, 2)


def test_fourth_generator_is_delta_conjugate():
    d = delta(4)
    assert braid_equal(BraidWord(4, (4,)), d * BraidWord(4, (3,)) * d.inverse())
    assert braid_equal(BraidWord(4, (4,)) ** -1, d * BraidWord(4, (-3,)) * d.inverse())


def test_delta():
    assert delta(4).letters == (1, 2, 3)
    assert delta(3).letters == (1, 2)


def test_exponent_sum():
    assert BraidWord.parse("1 -2 3").exponent_sum() == 1
    assert BraidWord(4, (4,)).exponent_sum() == 1
    assert BraidWord(4, (-4, -4)).exponent_sum() == -2
    assert delta(4).exponent_sum() == 3


def test_artin_action_on_generators():
    phi = artin_action(BraidWord(4, (1,)))
    a, b, c, d = (RankedWord.generator(4, i) for i in (1, 2, 3, 4))
    assert phi(a) == a * b * a.inverse()
    assert phi(b) == a
    assert phi(c) == c
    assert phi(d) == d
    psi = artin_action(BraidWord(4, (-1,)))
    assert psi(a) == b
    assert psi(b) == b.inverse() * a * b


def test_artin_action_is_homomorphism():
    rng = random.Random(314)
    for _ in range(100):
        l1 = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 5)))
        l2 = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 5)))
        w1, w2 = BraidWord(4, l1), BraidWord(4, l2)
        assert artin_action(w1 * w2) == artin_action(w1) * artin_action(w2)


def test_full_twist_is_central():
    twist = delta(4) ** 4
    phi = artin_action(twist)
    gens = [RankedWord.generator(4, i) for i in (1, 2, 3, 4)]
    core = RankedWord(4, "abcd")
    assert phi(core) == core
    for g in (BraidWord(4, (i,)) for i in (1, 2, 3, 4)):
        assert braid_equal(twist * g, g * twist)


def test_braid_equal():
    assert braid_equal(BraidWord.parse("1 2 1"), BraidWord.parse("2 1 2"))
    assert braid_equal(BraidWord.parse("1 3"), BraidWord.parse("3 1"))
    assert not braid_equal(BraidWord.parse("1"), BraidWord.parse("2"))
    assert braid_equal(BraidWord.parse("1 -1"), BraidWord(4))
    rng = random.Random(2718)
    for _ in range(30):
        base = tuple(rng.choice((1, 2, 3, -1, -2, -3)) for _ in range(rng.randint(0, 4)))
        w = BraidWord(4, base)
        assert braid_equal(w, _scramble(rng, base, 3))
    assert not braid_equal(BraidWord(4, (1,)), _scramble(rng, (2,), 3))


def test_eq_mod_center():
    d4 = delta(4) ** 4
    assert eq_mod_center(BraidWord(4), d4)
    assert eq_mod_center(BraidWord(4), d4 ** -2)
    assert eq_mod_center(BraidWord.parse("1"), d4 * BraidWord.parse("1"))
    assert not eq_mod_center(BraidWord.parse("1"), BraidWord.parse("2"))
    # exponent sums differing by a non-multiple of 12 fail fast
    assert not eq_mod_center(BraidWord(4), BraidWord.parse("1"))
    rng = random.Random(137)
    for _ in range(20):
        base = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3)) for _ in range(rng.randint(0, 4)))
        w = BraidWord(4, base)
        k = rng.choice((-2, -1, 1, 2))
        assert eq_mod_center(w, w * d4 ** k)


def test_omega():
    assert omega(BraidWord(4, (1,))).letters == (-2,)
    # the image of s3 is s4^-1, returned in expanded form
    assert omega(BraidWord(4, (3,))).letters == (-3, -2, -1, 2, 3)
    assert braid_equal(omega(BraidWord(4, (3,))), BraidWord(4, (-4,)).expand())
    assert omega(BraidWord(4, (4, -2))).letters == (-3, 1)
    rng = random.Random(808)
    for _ in range(50):
        letters = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 6)))
        w = BraidWord(4, letters)
        assert braid_equal(omega(omega(w)), w)
        assert omega(w).exponent_sum() == -w.exponent_sum()
        w2 = BraidWord(4, tuple(rng.choice((1, 2, 3, 4, -1, -2)) for _ in range(3)))
        assert braid_equal(omega(w * w2), omega(w) * omega(w2))


def test_ext_braid():
    m = ExtBraid.mirror()
    assert m * m == ExtBraid.identity() or (m * m).equal(ExtBraid.identity())
    s1 = ExtBraid(BraidWord(4, (1,)))
    # conjugation by the mirror element applies omega to the braid part
    assert (m * s1 * m).equal(ExtBraid(BraidWord(4, (-2,))))
    assert (s1 * s1.inverse()).equal(ExtBraid.identity())
    assert s1.inverse().equal(ExtBraid(BraidWord(4, (-1,))))
    assert (m * s1).inverse().equal(s1.inverse() * m)


def test_ext_braid_equal_mod_center():
    d4 = ExtBraid(delta(4) ** 4)
    s1 = ExtBraid(BraidWord(4, (1,)))
    assert (s1 * d4).equal_mod_center(s1)
    assert not (s1 * d4).equal(s1)
    m = ExtBraid.mirror()
    assert not (m * s1).equal_mod_center(s1)


def test_f2_action_on_generators():
    assert f2_action(BraidWord(4, (1,))) == generator("G")
    assert f2_action(BraidWord(4, (-1,))) == generator_inverse("G")
    assert f2_action(BraidWord(4, (2,))) == generator_inverse("D")
    assert f2_action(BraidWord(4, (-2,))) == generator("D")
    assert f2_action(BraidWord(4, (3,))) == generator("Gt")
    assert f2_action(BraidWord(4, (-3,))) == generator_inverse("Gt")
    assert f2_action(BraidWord(4, (4,))) == generator_inverse("Dt")
    assert f2_action(BraidWord(4, (-4,))) == generator("Dt")
    assert f2_action(BraidWord(4)) == F2Morphism.identity()


def test_f2_action_is_homomorphism():
    rng = random.Random(90210)
    for _ in range(100):
        l1 = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 5)))
        l2 = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 5)))
        w1, w2 = BraidWord(4, l1), BraidWord(4, l2)
        assert f2_action(w1 * w2) == f2_action(w1) * f2_action(w2)


def test_f2_action_ext():
    e = ExtBraid(BraidWord(4, (1,)), 1)
    assert f2_action_ext(e) == f2_action(BraidWord(4, (1,))) * generator("E")
    assert f2_action_ext(ExtBraid.mirror()) == generator("E")
    assert f2_action_ext(ExtBraid.identity()) == F2Morphism.identity()
    rng = random.Random(4321)
    for _ in range(60):
        e1 = ExtBraid(
            BraidWord(4, tuple(rng.choice((1, 2, 3, 4, -1, -2)) for _ in range(3))),
            rng.choice((0, 1)),
        )
        e2 = ExtBraid(
            BraidWord(4, tuple(rng.choice((1, 2, 3, 4, -1, -2)) for _ in range(3))),
            rng.choice((0, 1)),
        )
        assert f2_action_ext(e1 * e2) == f2_action_ext(e1) * f2_action_ext(e2)


def test_gl2_image_matches_abelianized_action():
    rng = random.Random(602)
    for _ in range(100):
        letters = tuple(rng.choice((1, 2, 3, 4, -1, -2, -3, -4)) for _ in range(rng.randint(0, 6)))
        w = BraidWord(4, letters)
        assert gl2_image(w) == f2_action(w).matrix()


def test_gl2_image_on_three_strands():
    # the projection is defined on 3-strand words too
    assert gl2_image(BraidWord(3, (1,))) == Mat2(1, 1, 0, 1)
    assert gl2_image(BraidWord(3, (2,))) == Mat2(1, 0, -1, 1)
    assert gl2_image(delta(3) ** 6).det == 1


def test_matrix_image_separates_short_positive_words():
    # words over {s1, s2^-1} map one-to-one onto the monoid they generate
    seen: dict[Mat2, tuple[int, ...]] = {}
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(9):
        next_frontier = []
        for letters in frontier:
            m = gl2_image(BraidWord(4, letters))
            assert m not in seen or seen[m] == letters
            if m not in seen:
                seen[m] = letters
                next_frontier.append(letters)
        frontier = [l + (g,) for l in next_frontier for g in (1, -2)]
    assert len(seen) == 511


def test_to_b3():
    q = to_b3(BraidWord(4, (1, 2, 3, -4)))
    assert q.strands == 3
    assert q.letters == (1, 2, 1, -1, -2, -1, 2, 1)
    assert to_b3(BraidWord(4, (1,))).letters == (1,)
    assert to_b3(BraidWord(4, (3,))).letters == (1,)
    assert to_b3(BraidWord(4, (2,))).letters == (2,)
    assert to_b3(BraidWord(4, (4,))).letters == (-1, -2, 1, 2, 1)
    # kernel elements: s1 s3^-1 and the full twist land in the kernel targets
    assert braid_equal(to_b3(BraidWord(4, (1, -3))), BraidWord(3))
    assert braid_equal(to_b3(delta(4) ** 4), delta(3) ** 6)


def test_acts_by_inner():
    assert acts_by_inner(BraidWord(4, (1, -3)))
    assert acts_by_inner(BraidWord(4, (2, 1, -3, -2)))
    assert acts_by_inner(delta(4) ** 4)
    assert not acts_by_inner(BraidWord(4, (1,)))
    assert not acts_by_inner(BraidWord(4, (1, 3)))


def test_embed_sturmian():
    w = embed_sturmian(parse_sturmian("G D Gt Dt"))
    assert w.letters == (1, -2, 3, -4)
    assert embed_sturmian(()) == BraidWord(4)
    with pytest.raises(ValueError):
        embed_sturmian(parse_sturmian("E"))
    with pytest.raises(ValueError):
        embed_sturmian(parse_sturmian("G'"))


def test_embed_sturmian_section():
    rng = random.Random(55)
    for _ in range(100):
        word = tuple((rng.choice(("G", "Gt", "D", "Dt")), 1) for _ in range(rng.randint(0, 6)))
        assert f2_action(embed_sturmian(word)) == eval_sturmian(word)


def test_from_aut_generator():
    e = from_aut_generator("E")
    assert e.flag == 1 and e.braid == BraidWord(4)
    dt = from_aut_generator("Dt")
    assert dt.flag == 0 and dt.braid.letters == (-4,)
    o = from_aut_generator("O")
    assert o.flag == 1
    assert o.equal(ExtBraid.mirror() * ExtBraid(delta(4)))
    with pytest.raises(ValueError):
        from_aut_generator("G2")
    for name in ("E", "Dt", "O"):
        assert f2_action_ext(from_aut_generator(name)) == generator(name), name


def test_suite_registry():
    assert SUITE_NAMES == (
        "eq1.11-in-ext",
        "eq1.7",
        "eq1.9-1.10",
        "eq2.1",
        "eq2.2",
        "eq2.3-2.4",
        "fg-identity",
        "lemma1.1",
        "lemma1.2",
        "lemma1.3",
        "remark1.4",
    )
    with pytest.raises(ValueError):
        relation_suite("nope")
    with pytest.raises(ValueError):
        relation_suite("eq2.1", kmax=-1)


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_relation_suites_pass(name):
    results = relation_suite(name, kmax=8)
    assert results, name
    for label, ok in results:
        assert ok, f"{name}: {label}"
