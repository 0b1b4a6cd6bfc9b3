"""Reduced words in free groups of small rank.

Rank-two words, the common currency of this package, are strings over
``a``, ``b`` with capital letters denoting inverses; the empty word
prints as ``1``.  Ranks 3 and 4 add the letters ``c`` and ``d`` and are
used by the braid machinery.  Values are immutable and every operation
returns a fresh reduced word, so they are safe to share freely.
"""

from __future__ import annotations

from typing import Iterator

_F2_LETTERS = frozenset("abAB")
_RANK_LETTERS = "abcd"


def _reduced(s: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[str] = []
    for ch in s:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def _joined(u: str, v: str) -> str:
    # both operands are already reduced, so cancellation is confined to the seam
    k = 0
    m = min(len(u), len(v))
    while k < m and u[-1 - k] == v[k].swapcase():
        k += 1
    if k:
        return u[: len(u) - k] + v[k:]
    return u + v


def _inverted(s: str) -> str:
    return s[::-1].swapcase()


class FreeWord:
    """A reduced word over {a, b, A, B} in the free group on a and b.

    >>> FreeWord("abBA")
    FreeWord('')
    >>> str(FreeWord("ab") * FreeWord("BA"))
    '1'
    >>> FreeWord("aaabaab").abelianization()
    (5, 2)
    """

    __slots__ = ("_s",)

    def __init__(self, letters: str = "") -> None:
        bad = set(letters) - _F2_LETTERS
        if bad:
            raise ValueError(
                "invalid letter(s) %s: words are written over a, b, A, B"
                % ", ".join(sorted(bad))
            )
        self._s = _reduced(letters)

    @classmethod
    def _make(cls, reduced: str) -> FreeWord:
        # trusted constructor, `reduced` must already be reduced
        w = object.__new__(cls)
        w._s = reduced
        return w

    @classmethod
    def parse(cls, text: str) -> FreeWord:
        """Parse the exchange format: a word over {a, b, A, B}, with ``1`` for the empty word."""
        if text == "1":
            return cls._make("")
        return cls(text)

    @property
    def letters(self) -> str:
        return self._s

    def __str__(self) -> str:
        return self._s or "1"

    def __repr__(self) -> str:
        return "FreeWord(%r)" % self._s

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeWord) and self._s == other._s

    def __hash__(self) -> int:
        return hash(self._s)

    def __len__(self) -> int:
        return len(self._s)

    def __bool__(self) -> bool:
        return bool(self._s)

    def __iter__(self) -> Iterator[str]:
        return iter(self._s)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord._make(_joined(self._s, other._s))

    def __pow__(self, n: int) -> FreeWord:
        if n < 0:
            return self.inverse() ** (-n)
        return FreeWord._make(_reduced(self._s * n))

    def inverse(self) -> FreeWord:
        return FreeWord._make(_inverted(self._s))

    def reverse(self) -> FreeWord:
        """The same letters written backwards, signs kept."""
        return FreeWord._make(self._s[::-1])

    @property
    def is_palindrome(self) -> bool:
        return self._s == self._s[::-1]

    @property
    def is_positive(self) -> bool:
        """True when no letter is inverted, i.e. the word lies in the monoid on a, b."""
        s = self._s
        return s.islower() or not s

    def cyclic_reduce(self) -> tuple[FreeWord, FreeWord]:
        """Split into (core, conjugator) with self == conjugator * core * conjugator^-1.

        The core is cyclically reduced: its first letter is not the
        inverse of its last.

        >>> FreeWord("abA").cyclic_reduce()
        (FreeWord('b'), FreeWord('a'))
        """
        s = self._s
        i, j = 0, len(s)
        while j - i >= 2 and s[i] == s[j - 1].swapcase():
            i += 1
            j -= 1
        return FreeWord._make(s[i:j]), FreeWord._make(s[:i])

    @property
    def is_cyclically_reduced(self) -> bool:
        s = self._s
        return len(s) < 2 or s[0] != s[-1].swapcase()

    def conjugated_by(self, x: FreeWord) -> FreeWord:
        """x * self * x^-1, reduced."""
        return FreeWord._make(_joined(_joined(x._s, self._s), _inverted(x._s)))

    def is_conjugate_to(self, other: FreeWord) -> bool:
        """Conjugacy test: cyclically reduce both sides, then compare cyclic rotations."""
        c1, _ = self.cyclic_reduce()
        c2, _ = other.cyclic_reduce()
        if len(c1._s) != len(c2._s):
            return False
        return not c1._s or c2._s in c1._s + c1._s

    def abelianization(self) -> tuple[int, int]:
        """Exponent sums of a and b."""
        s = self._s
        return s.count("a") - s.count("A"), s.count("b") - s.count("B")

    def commutes_with(self, other: FreeWord) -> bool:
        return _joined(self._s, other._s) == _joined(other._s, self._s)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


class RankedWord:
    """A reduced word in a free group of rank 2, 3 or 4.

    Generators are written ``a`` through ``d`` with capitals for
    inverses, so the rank-2 case matches :class:`FreeWord` letter for
    letter.  Operations on words of different ranks are rejected.
    """

    __slots__ = ("_rank", "_s")

    def __init__(self, rank: int, letters: str = "") -> None:
        if rank not in (2, 3, 4):
            raise ValueError("rank must be 2, 3 or 4")
        allowed = _RANK_LETTERS[:rank]
        bad = set(letters) - set(allowed + allowed.upper())
        if bad:
            raise ValueError(
                "invalid letter(s) %s for rank %d"
                % (", ".join(sorted(bad)), rank)
            )
        self._rank = rank
        self._s = _reduced(letters)

    @classmethod
    def _make(cls, rank: int, reduced: str) -> RankedWord:
        w = object.__new__(cls)
        w._rank = rank
        w._s = reduced
        return w

    @classmethod
    def generator(cls, rank: int, index: int) -> RankedWord:
        """The index-th generator (1-based) as a one-letter word."""
        if not 1 <= index <= rank:
            raise ValueError("generator index out of range")
        return cls(rank, _RANK_LETTERS[index - 1])

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def letters(self) -> str:
        return self._s

    def __str__(self) -> str:
        return self._s or "1"

    def __repr__(self) -> str:
        return "RankedWord(%d, %r)" % (self._rank, self._s)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RankedWord)
            and self._rank == other._rank
            and self._s == other._s
        )

    def __hash__(self) -> int:
        return hash((self._rank, self._s))

    def __len__(self) -> int:
        return len(self._s)

    def __bool__(self) -> bool:
        return bool(self._s)

    def __mul__(self, other: RankedWord) -> RankedWord:
        if not isinstance(other, RankedWord):
            return NotImplemented
        if self._rank != other._rank:
            raise ValueError("rank mismatch: %d vs %d" % (self._rank, other._rank))
        return RankedWord._make(self._rank, _joined(self._s, other._s))

    def inverse(self) -> RankedWord:
        return RankedWord._make(self._rank, _inverted(self._s))
