"""Endomorphisms of the rank-two free group and their 2x2 integer shadows.

A morphism is stored by the images of a and b and composed like any map:
``(phi * psi)(w) == phi(psi(w))``.  Seven classical generators are
available by name, with the same tokens used in text input and output:

====== ==============================
token  images
====== ==============================
``D``  a -> ba,   b -> b
``Dt`` a -> ab,   b -> b
``G``  a -> a,    b -> ab
``Gt`` a -> a,    b -> ba
``E``  a -> b,    b -> a
``O``  a -> a^-1, b -> b
``T``  a -> a,    b -> b^-1
====== ==============================

Words over these tokens ("Sturmian words") are kept as tuples of
``(token, exponent)`` pairs with exponent +1 or -1, and evaluate to a
morphism by composing left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import FreeWord, _inverted


@dataclass(frozen=True)
class Mat2:
    """An exact 2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __mul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            return self.inverse() ** (-n)
        out = Mat2.identity()
        for _ in range(n):
            out = out * self
        return out

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> Mat2:
        d = self.det
        if d == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if d == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError("matrix is not invertible over the integers")


# Stern-Brocot shears: the abelianized images of the G-type and D-type
# generators respectively.
SHEAR_R = Mat2(1, 1, 0, 1)
SHEAR_L = Mat2(1, 0, 1, 1)


class F2Morphism:
    """An endomorphism of the free group on a and b."""

    __slots__ = ("image_a", "image_b")

    def __init__(self, image_a: FreeWord, image_b: FreeWord) -> None:
        self.image_a = image_a
        self.image_b = image_b

    @classmethod
    def identity(cls) -> F2Morphism:
        return cls(FreeWord("a"), FreeWord("b"))

    def __repr__(self) -> str:
        return "F2Morphism(a -> %s, b -> %s)" % (self.image_a, self.image_b)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, F2Morphism)
            and self.image_a == other.image_a
            and self.image_b == other.image_b
        )

    def __hash__(self) -> int:
        return hash((self.image_a, self.image_b))

    def __call__(self, w: FreeWord) -> FreeWord:
        ia = self.image_a.letters
        ib = self.image_b.letters
        table = {"a": ia, "A": _inverted(ia), "b": ib, "B": _inverted(ib)}
        return FreeWord("".join(table[ch] for ch in w.letters))

    def __mul__(self, other: F2Morphism) -> F2Morphism:
        if not isinstance(other, F2Morphism):
            return NotImplemented
        return F2Morphism(self(other.image_a), self(other.image_b))

    def __pow__(self, n: int) -> F2Morphism:
        if n < 0:
            raise ValueError("no general inverse; compose generator inverses instead")
        out = F2Morphism.identity()
        for _ in range(n):
            out = out * self
        return out

    def matrix(self) -> Mat2:
        """The induced matrix on Z^2; columns are the abelianized images of a and b."""
        p, q = self.image_a.abelianization()
        r, s = self.image_b.abelianization()
        return Mat2(p, r, q, s)

    @property
    def is_positive(self) -> bool:
        return self.image_a.is_positive and self.image_b.is_positive


GENERATOR_NAMES = ("D", "Dt", "G", "Gt", "E", "O", "T")

_IMAGES = {
    "D": ("ba", "b"),
    "Dt": ("ab", "b"),
    "G": ("a", "ab"),
    "Gt": ("a", "ba"),
    "E": ("b", "a"),
    "O": ("A", "b"),
    "T": ("a", "B"),
}

# closed forms for the inverses; E, O and T are involutions
_INVERSE_IMAGES = {
    "D": ("Ba", "b"),
    "Dt": ("aB", "b"),
    "G": ("a", "Ab"),
    "Gt": ("a", "bA"),
    "E": ("b", "a"),
    "O": ("A", "b"),
    "T": ("a", "B"),
}


def generator(name: str) -> F2Morphism:
    """One of the seven named automorphisms, by token."""
    try:
        ia, ib = _IMAGES[name]
    except KeyError:
        raise ValueError(
            "unknown generator %r; expected one of %s" % (name, ", ".join(GENERATOR_NAMES))
        ) from None
    return F2Morphism(FreeWord(ia), FreeWord(ib))


def generator_inverse(name: str) -> F2Morphism:
    """The inverse of :func:`generator` by its closed form."""
    try:
        ia, ib = _INVERSE_IMAGES[name]
    except KeyError:
        raise ValueError(
            "unknown generator %r; expected one of %s" % (name, ", ".join(GENERATOR_NAMES))
        ) from None
    return F2Morphism(FreeWord(ia), FreeWord(ib))


def inner(w: FreeWord) -> F2Morphism:
    """Conjugation x -> w x w^-1."""
    return F2Morphism(
        FreeWord("a").conjugated_by(w), FreeWord("b").conjugated_by(w)
    )


def inner_witness(phi: F2Morphism) -> FreeWord | None:
    """The unique w with phi == inner(w), or None when phi is not inner.

    The witness is read off structurally: phi(a) must cyclically reduce
    to the letter a through some conjugator r, and r^-1 phi(b) r must
    have the shape a^k b a^-k; then w = r a^k.  The candidate is
    verified before it is returned, so a None answer is authoritative.
    """
    core, r = phi.image_a.cyclic_reduce()
    if core.letters != "a":
        return None
    z = (r.inverse() * phi.image_b * r).letters
    k = 0
    n = len(z)
    while k < n and z[k] in "aA":
        k += 1
    if k >= n or z[k] != "b":
        return None
    head = z[:k]
    if head and len(set(head)) != 1:
        return None
    exp = k if head.startswith("a") or not head else -k
    w = r * FreeWord("a") ** exp
    if phi == inner(w):
        return w
    return None


SturmianWord = tuple[tuple[str, int], ...]

_STURMIAN_TOKENS = ("G", "Gt", "D", "Dt", "E")


def parse_sturmian(text: str) -> SturmianWord:
    """Parse whitespace-separated tokens, a trailing apostrophe meaning inverse.

    >>> parse_sturmian("G D' Gt E")
    (('G', 1), ('D', -1), ('Gt', 1), ('E', 1))
    """
    out = []
    for tok in text.split():
        exp = 1
        if tok.endswith("'"):
            exp = -1
            tok = tok[:-1]
        if tok not in _STURMIAN_TOKENS:
            raise ValueError(
                "unknown token %r; expected one of %s with optional ' suffix"
                % (tok, ", ".join(_STURMIAN_TOKENS))
            )
        out.append((tok, exp))
    return tuple(out)


def format_sturmian(word: SturmianWord) -> str:
    return " ".join(name + ("" if exp == 1 else "'") for name, exp in word)


def sturmian_inverse(word: SturmianWord) -> SturmianWord:
    return tuple((name, -exp) for name, exp in reversed(word))


def is_special_sturmian(word: SturmianWord) -> bool:
    """True for words over G, Gt, D, Dt with no inverses (the positive tree)."""
    return all(exp == 1 and name in ("G", "Gt", "D", "Dt") for name, exp in word)


def eval_sturmian(word: SturmianWord) -> F2Morphism:
    """Compose the named generators left to right."""
    out = F2Morphism.identity()
    for name, exp in word:
        out = out * (generator(name) if exp == 1 else generator_inverse(name))
    return out
