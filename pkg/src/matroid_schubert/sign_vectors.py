"""Sign vectors on a finite ground set, stored as a pair of bitmasks.

A sign vector assigns each coordinate of ``{0, ..., n-1}`` one of ``-``, ``0``,
``+``.  Equality and hashing are structural, so sign vectors can live in sets
and serve as poset labels.  The same type doubles as a sign *pattern* (a
per-coordinate constraint) for the feasibility oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .util import bits, mask_of

_CHAR_OF = {1: "+", 0: "0", -1: "-"}
_SIGN_OF_CHAR = {"+": 1, "0": 0, "-": -1}


@dataclass(frozen=True)
class SignVector:
    """Element of {-,0,+}^n with plus/minus supports as bitmasks."""

    n: int
    plus: int = 0
    minus: int = 0

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.plus & self.minus:
            raise ValueError("plus and minus supports overlap")
        if (self.plus | self.minus) & ~full:
            raise ValueError("support exceeds ground set")

    @classmethod
    def zero(cls, n: int) -> "SignVector":
        return cls(n, 0, 0)

    @classmethod
    def from_signs(cls, signs) -> "SignVector":
        """Build from an iterable of -1/0/+1 integers or '-', '0', '+' chars."""
        plus = minus = 0
        m = 0
        for i, s in enumerate(signs):
            if isinstance(s, str):
                s = _SIGN_OF_CHAR[s]
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
            m = i + 1
        return cls(m, plus, minus)

    @classmethod
    def from_supports(cls, n: int, plus, minus) -> "SignVector":
        return cls(n, mask_of(plus), mask_of(minus))

    def sign(self, i: int) -> int:
        if self.plus >> i & 1:
            return 1
        if self.minus >> i & 1:
            return -1
        return 0

    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.n))

    @property
    def support_mask(self) -> int:
        return self.plus | self.minus

    @property
    def support(self) -> frozenset[int]:
        return frozenset(bits(self.support_mask))

    @property
    def zero_set(self) -> frozenset[int]:
        full = (1 << self.n) - 1
        return frozenset(bits(full & ~self.support_mask))

    def is_zero(self) -> bool:
        return self.support_mask == 0

    def __neg__(self) -> "SignVector":
        return SignVector(self.n, self.minus, self.plus)

    def leq(self, other: "SignVector") -> bool:
        """Containment order: self <= other iff supports nest signwise."""
        return (
            self.n == other.n
            and self.plus & ~other.plus == 0
            and self.minus & ~other.minus == 0
        )

    def reorient(self, coords) -> "SignVector":
        """Negate the coordinates in ``coords``."""
        m = mask_of(coords)
        plus = (self.plus & ~m) | (self.minus & m)
        minus = (self.minus & ~m) | (self.plus & m)
        return SignVector(self.n, plus, minus)

    def mask_to(self, coords) -> "SignVector":
        """Zero out every coordinate outside ``coords`` (same ground set)."""
        m = mask_of(coords)
        return SignVector(self.n, self.plus & m, self.minus & m)

    def restrict(self, coords) -> "SignVector":
        """Project onto ``coords``, reindexed by their sorted order."""
        cs = sorted(coords)
        plus = minus = 0
        for new, old in enumerate(cs):
            if self.plus >> old & 1:
                plus |= 1 << new
            elif self.minus >> old & 1:
                minus |= 1 << new
        return SignVector(len(cs), plus, minus)

    def sort_key(self):
        return ("sv", self.n, self.signs())

    def __str__(self) -> str:
        return "".join(_CHAR_OF[s] for s in self.signs())

    def __repr__(self) -> str:
        return f"SignVector({self!s})"


def sign_of(v) -> SignVector:
    """Coordinatewise sign of a rational vector."""
    plus = minus = 0
    m = 0
    for i, x in enumerate(v):
        if x > 0:
            plus |= 1 << i
        elif x < 0:
            minus |= 1 << i
        m = i + 1
    return SignVector(m, plus, minus)


def compose(x: SignVector, y: SignVector) -> SignVector:
    """Composition: take x's sign where nonzero, else y's."""
    if x.n != y.n:
        raise ValueError("ground sets differ")
    free = ~x.support_mask
    return SignVector(x.n, x.plus | (y.plus & free), x.minus | (y.minus & free))


def perturbation_step(v, w) -> Fraction:
    """A positive eps with sign(v + eps*w) = compose(sign(v), sign(w)).

    Any eps below min |v_i| / |w_i| over coordinates where both are nonzero
    works; we return 1/N for the least integer N past that bound.
    """
    bound = None
    for a, b in zip(v, w):
        if a != 0 and b != 0:
            r = abs(Fraction(a)) / abs(Fraction(b))
            if bound is None or r < bound:
                bound = r
    if bound is None:
        return Fraction(1)
    n = bound.denominator // bound.numerator + 1
    return Fraction(1, n)
