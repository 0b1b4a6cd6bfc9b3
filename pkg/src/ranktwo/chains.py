"""Conjugation chains of positive word pairs and basis decision procedures.

A pair (u, v) of nonempty positive words advances by one step when u
and v start with the same letter c: both are conjugated by c^-1, which
rotates each word one place to the left.  The finite or infinite chain
through a pair decides whether it is a basis of the free group,
enumerates the cyclically reduced conjugate bases, and locates the
palindromic conjugate when both component lengths are odd.

Facts used throughout: a positive pair is a basis exactly when its
maximal chain is finite of length |u| + |v| - 2; a chain longer than
that never terminates and forces u and v to be powers of a common word;
cyclically reduced conjugates of a positive pair are precisely the
members of its chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .morphisms import SturmianWord, generator
from .words import FreeWord

_T = generator("T")

WordPair = tuple[FreeWord, FreeWord]

TraceStep = tuple


class NotABasisError(ValueError):
    pass


class NotCyclicallyReducedError(ValueError):
    pass


class EvenLengthError(ValueError):
    pass


class NotStandardPairError(ValueError):
    pass


def _check_positive_pair(u: FreeWord, v: FreeWord) -> None:
    if not (u and v and u.is_positive and v.is_positive):
        raise ValueError("expected a pair of nonempty positive words")


def _check_cyclically_reduced(u: FreeWord, v: FreeWord) -> None:
    if not (u.is_cyclically_reduced and v.is_cyclically_reduced):
        raise NotCyclicallyReducedError("expected cyclically reduced words")


def step_forward(u: FreeWord, v: FreeWord) -> WordPair | None:
    """Rotate both words left when they share a first letter, else None."""
    _check_positive_pair(u, v)
    su, sv = u.letters, v.letters
    if su[0] != sv[0]:
        return None
    return FreeWord._make(su[1:] + su[0]), FreeWord._make(sv[1:] + sv[0])


def step_backward(u: FreeWord, v: FreeWord) -> WordPair | None:
    """Rotate both words right when they share a last letter, else None."""
    _check_positive_pair(u, v)
    su, sv = u.letters, v.letters
    if su[-1] != sv[-1]:
        return None
    return FreeWord._make(su[-1] + su[:-1]), FreeWord._make(sv[-1] + sv[:-1])


@dataclass(frozen=True)
class MaximalChain:
    """A maximal run of chain steps; ``pairs`` is None for an infinite chain."""

    pairs: tuple[WordPair, ...] | None

    @property
    def is_infinite(self) -> bool:
        return self.pairs is None

    @property
    def length(self) -> int:
        """The number of arrows in a finite chain."""
        if self.pairs is None:
            raise ValueError("an infinite chain has no length")
        return len(self.pairs) - 1


def _walk_chain(su: str, sv: str) -> tuple[list[tuple[str, str]], int] | None:
    """All chain members through (su, sv), or None when the chain is infinite.

    Returns the member list from the left end and the index of the
    starting pair in it.  Commuting words short-circuit to infinite; the
    walk is also capped, since no finite chain outruns |u| + |v| - 2.
    """
    if su + sv == sv + su:
        return None
    limit = len(su) + len(sv) - 2
    back = 0
    cu, cv = su, sv
    while cu[-1] == cv[-1]:
        cu = cu[-1] + cu[:-1]
        cv = cv[-1] + cv[:-1]
        back += 1
        if back > limit:
            return None
    members = [(cu, cv)]
    while cu[0] == cv[0]:
        cu = cu[1:] + cu[0]
        cv = cv[1:] + cv[0]
        members.append((cu, cv))
        if len(members) - 1 > limit:
            return None
    return members, back


def maximal_chain(u: FreeWord, v: FreeWord) -> MaximalChain:
    """The full chain through a positive pair, or the infinite marker."""
    _check_positive_pair(u, v)
    walked = _walk_chain(u.letters, v.letters)
    if walked is None:
        return MaximalChain(None)
    members, _ = walked
    return MaximalChain(
        tuple((FreeWord._make(a), FreeWord._make(b)) for a, b in members)
    )


def _chain_length(su: str, sv: str) -> int | None:
    walked = _walk_chain(su, sv)
    if walked is None:
        return None
    return len(walked[0]) - 1


def is_basis_positive(u: FreeWord, v: FreeWord) -> bool:
    """The chain criterion for a positive pair."""
    _check_positive_pair(u, v)
    return _chain_length(u.letters, v.letters) == len(u) + len(v) - 2


def nielsen_dehn_oracle(u: FreeWord, v: FreeWord) -> bool:
    """Independent basis test: the commutator is conjugate to that of the generators."""
    c = u * v * u.inverse() * v.inverse()
    return c.is_conjugate_to(_BASE_COMMUTATOR) or c.is_conjugate_to(
        _BASE_COMMUTATOR_INV
    )


_BASE_COMMUTATOR = FreeWord("abAB")
_BASE_COMMUTATOR_INV = FreeWord("baBA")


@dataclass(frozen=True)
class BasisVerdict:
    """Outcome of the general basis decision, with a replayable trace."""

    is_basis: bool
    reason: str
    trace: tuple[TraceStep, ...]


_QUADRANT_SIGNS = ((1, 1), (-1, 1), (-1, -1), (1, -1))
_QUADRANT_MAPS = {1: "id", 2: "T-inv", 3: "inv", 4: "T"}


def _common_quadrant(a: tuple[int, int], b: tuple[int, int]) -> int | None:
    for idx, (sp, sq) in enumerate(_QUADRANT_SIGNS, 1):
        if a[0] * sp >= 0 and a[1] * sq >= 0 and b[0] * sp >= 0 and b[1] * sq >= 0:
            return idx
    return None


def _apply_quadrant_map(name: str, w: FreeWord) -> FreeWord:
    # all four maps are involutions
    if name == "id":
        return w
    if name == "inv":
        return w.inverse()
    if name == "T":
        return _T(w)
    if name == "T-inv":
        return _T(w.inverse())
    raise ValueError("unknown quadrant map %r" % (name,))


_CONJUGATION_LETTERS = tuple(FreeWord(ch) for ch in "abAB")


def _normalize_cyclically_reduced(
    u: FreeWord, v: FreeWord
) -> tuple[FreeWord, FreeWord, bool, str] | str:
    """Steps two and three of the decision: move a cyclically reduced pair
    into the first quadrant.  Returns (u', v', second_inverted, map_name)
    or a failure reason."""
    pu, pv = u.abelianization(), v.abelianization()
    if pu == (0, 0) or pv == (0, 0):
        return "a word abelianizes to zero"
    inverted = False
    quad = _common_quadrant(pu, pv)
    if quad is None:
        quad = _common_quadrant(pu, (-pv[0], -pv[1]))
        if quad is None:
            return "images share no closed quadrant, even after inverting the second"
        inverted = True
        v = v.inverse()
    name = _QUADRANT_MAPS[quad]
    return _apply_quadrant_map(name, u), _apply_quadrant_map(name, v), inverted, name


def is_basis(u: FreeWord, v: FreeWord) -> BasisVerdict:
    """Decide whether (u, v) generates the whole free group.

    The decision conjugates the pair until cyclically reduced, moves the
    abelianized images into the first quadrant (inverting v if needed),
    requires the outcome to be positive, and applies the chain
    criterion.  Every normalization move lands in the trace, so a
    positive verdict can be replayed back to the input.
    """
    trace: list[TraceStep] = []
    while not (u.is_cyclically_reduced and v.is_cyclically_reduced):
        for d in _CONJUGATION_LETTERS:
            nu, nv = u.conjugated_by(d), v.conjugated_by(d)
            if len(nu) + len(nv) < len(u) + len(v):
                trace.append(("conjugate", d.letters))
                u, v = nu, nv
                break
        else:
            return BasisVerdict(
                False, "no conjugation shortens the pair", tuple(trace)
            )
    normalized = _normalize_cyclically_reduced(u, v)
    if isinstance(normalized, str):
        return BasisVerdict(False, normalized, tuple(trace))
    u, v, inverted, map_name = normalized
    if inverted:
        trace.append(("invert-second",))
    trace.append(("quadrant-map", map_name))
    if not (u.is_positive and v.is_positive):
        return BasisVerdict(
            False, "pair is not positive after normalization", tuple(trace)
        )
    trace.append(("positive-pair", u.letters, v.letters))
    n = _chain_length(u.letters, v.letters)
    trace.append(("chain-length", "infinite" if n is None else n))
    if n == len(u) + len(v) - 2:
        return BasisVerdict(True, "", tuple(trace))
    return BasisVerdict(False, "chain length differs from |u| + |v| - 2", tuple(trace))


def _normalized_chain(
    u: FreeWord, v: FreeWord
) -> tuple[tuple[WordPair, ...], bool, str]:
    """Normalize a cyclically reduced basis and materialize its chain."""
    _check_cyclically_reduced(u, v)
    normalized = _normalize_cyclically_reduced(u, v)
    if isinstance(normalized, str):
        raise NotABasisError(normalized)
    pu, pv, inverted, map_name = normalized
    if not (pu.is_positive and pv.is_positive):
        raise NotABasisError("pair is not positive after normalization")
    chain = maximal_chain(pu, pv)
    if chain.is_infinite or chain.length != len(pu) + len(pv) - 2:
        raise NotABasisError("chain length differs from |u| + |v| - 2")
    return chain.pairs, inverted, map_name


def _map_back(pair: WordPair, inverted: bool, map_name: str) -> WordPair:
    x, y = pair
    x = _apply_quadrant_map(map_name, x)
    y = _apply_quadrant_map(map_name, y)
    if inverted:
        y = y.inverse()
    return x, y


def conjugate_bases(u: FreeWord, v: FreeWord) -> tuple[WordPair, ...]:
    """All cyclically reduced bases conjugate to (u, v); there are |u| + |v| - 1."""
    pairs, inverted, map_name = _normalized_chain(u, v)
    return tuple(_map_back(p, inverted, map_name) for p in pairs)


def palindromize(u: FreeWord, v: FreeWord) -> WordPair:
    """The unique palindromic basis conjugate to (u, v).

    Both lengths must be odd: one even length already rules out a
    palindromic conjugate, because the even-length component of a basis
    has even exponent sum on exactly one generator while a palindrome of
    even length has both exponent sums even.
    """
    if len(u) % 2 == 0 or len(v) % 2 == 0:
        raise EvenLengthError("palindromic conjugates need odd length components")
    pairs, inverted, map_name = _normalized_chain(u, v)
    middle = (len(u) + len(v)) // 2 - 1
    return _map_back(pairs[middle], inverted, map_name)


def in_same_chain(
    u: FreeWord, v: FreeWord, u_pos: FreeWord, v_pos: FreeWord
) -> bool:
    """Whether the cyclically reduced pair (u, v) occurs in the chain of (u_pos, v_pos).

    For a finite chain this is exactly simultaneous conjugacy of the
    pairs.  Infinite chains cycle, so the capped walk still sees every
    member.
    """
    _check_cyclically_reduced(u, v)
    _check_positive_pair(u_pos, v_pos)
    target = (u.letters, v.letters)
    su, sv = u_pos.letters, v_pos.letters
    walked = _walk_chain(su, sv)
    if walked is not None:
        return target in walked[0]
    if len(u.letters) != len(su) or len(v.letters) != len(sv):
        return False
    cu, cv = su, sv
    for _ in range(len(su) + len(sv) + 1):
        if (cu, cv) == target:
            return True
        if cu[0] != cv[0]:
            return False
        cu = cu[1:] + cu[0]
        cv = cv[1:] + cv[0]
    return False


def _strip_tree(su: str, sv: str, suffix: bool) -> list[str] | None:
    """Peel one component off the other until (a, b); None when stuck.

    Prefix peeling inverts the tree built from G and D, suffix peeling
    the one built from Gt and Dt.  Tokens come out in composition order,
    outermost first.
    """
    out: list[str] = []
    while (su, sv) != ("a", "b"):
        if len(sv) > len(su):
            if suffix:
                if not sv.endswith(su):
                    return None
                sv = sv[: -len(su)]
                out.append("Gt")
            else:
                if not sv.startswith(su):
                    return None
                sv = sv[len(su):]
                out.append("G")
        elif len(su) > len(sv):
            if suffix:
                if not su.endswith(sv):
                    return None
                su = su[: -len(sv)]
                out.append("Dt")
            else:
                if not su.startswith(sv):
                    return None
                su = su[len(sv):]
                out.append("D")
        else:
            return None
    out.reverse()
    return out


def standard_pair_decompose(u: FreeWord, v: FreeWord) -> SturmianWord:
    """Write the pair as the generator images of a composition of tree morphisms.

    The result s satisfies eval_sturmian(s) == (a -> u, b -> v).  Both
    component orders and both peeling orientations are attempted; when
    only the swapped order works, a single trailing E records the swap.
    """
    _check_positive_pair(u, v)
    su, sv = u.letters, v.letters
    for swapped in (False, True):
        first, second = (sv, su) if swapped else (su, sv)
        for suffix in (False, True):
            tokens = _strip_tree(first, second, suffix)
            if tokens is not None:
                word = [(t, 1) for t in tokens]
                if swapped:
                    word.append(("E", 1))
                return tuple(word)
    raise NotStandardPairError(
        "(%s, %s) does not peel down to the generator pair" % (u, v)
    )


def sturmian_position(
    u: FreeWord, v: FreeWord
) -> tuple[SturmianWord, int, FreeWord]:
    """Locate a positive basis inside its chain.

    Returns (standard, offset, conjugator) where standard decomposes the
    left end (u0, v0) of the chain, offset is the index of (u, v) in it,
    and the conjugator w is the length-offset prefix of the infinite
    power of u0, so that u == w^-1 u0 w and v == w^-1 v0 w.
    """
    _check_positive_pair(u, v)
    chain = maximal_chain(u, v)
    if chain.is_infinite or chain.length != len(u) + len(v) - 2:
        raise NotABasisError("(%s, %s) is not a basis" % (u, v))
    offset = chain.pairs.index((u, v))
    u0, v0 = chain.pairs[0]
    s0 = u0.letters
    conjugator = FreeWord._make((s0 * (offset // len(s0) + 1))[:offset])
    return standard_pair_decompose(u0, v0), offset, conjugator
