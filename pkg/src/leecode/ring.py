"""Arithmetic over Z2 and over the four element ring Z2[u] with u^2 = 0.

Binary vectors live in packed integers: coordinate j of a length-m vector
is bit j - 1, so the vector (1, 0, 1) becomes 0b101.  Popcounts and xors on
plain ints keep the hot loops cheap and leave nothing to allocate.

A word over Z2[u] of length n is stored as two n-bit masks (Q, R), entry i
being Q_i + u * R_i.  The Gray image of such a word is the binary word
(R, Q xor R) of length 2n, and the Lee weight equals the Hamming weight of
that image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class BitVec:
    """Vector in Z2^m, coordinate j stored in bit j - 1 of ``bits``."""

    bits: int  # packed entries, 0 <= bits < 2^m
    m: int  # number of coordinates, at least 2

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"need at least two coordinates, got m={self.m}")
        if not 0 <= self.bits < (1 << self.m):
            raise ValueError(f"bits {self.bits:#x} out of range for m={self.m}")

    @classmethod
    def from_coords(cls, coords: Iterable[int], m: int) -> "BitVec":
        """Build a vector from 1-based coordinate positions."""
        bits = 0
        for j in coords:
            if not 1 <= j <= m:
                raise ValueError(f"coordinate {j} out of range 1..{m}")
            bits |= 1 << (j - 1)
        return cls(bits, m)

    def weight(self) -> int:
        """Hamming weight."""
        return self.bits.bit_count()

    def support(self) -> Tuple[int, ...]:
        """1-based coordinates of the nonzero entries, ascending."""
        return tuple(j + 1 for j in range(self.m) if self.bits >> j & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: {self.m} != {other.m}")
        return BitVec(self.bits ^ other.bits, self.m)


def parity_dot(x: BitVec, y: BitVec) -> int:
    """Standard inner product of two binary vectors, reduced mod 2."""
    if x.m != y.m:
        raise ValueError(f"dimension mismatch: {x.m} != {y.m}")
    return (x.bits & y.bits).bit_count() & 1


@dataclass(frozen=True)
class Z2uElement:
    """Element y + u*z of Z2[u], with y, z in {0, 1}."""

    y: int
    z: int

    def __post_init__(self) -> None:
        if self.y not in (0, 1) or self.z not in (0, 1):
            raise ValueError(f"components must be bits, got ({self.y}, {self.z})")

    def __add__(self, other: "Z2uElement") -> "Z2uElement":
        return Z2uElement(self.y ^ other.y, self.z ^ other.z)

    def __mul__(self, other: "Z2uElement") -> "Z2uElement":
        # (y1 + u z1)(y2 + u z2) = y1 y2 + u (y1 z2 + z1 y2), the u^2 term dies
        return Z2uElement(self.y & other.y, (self.y & other.z) ^ (self.z & other.y))

    def is_zero(self) -> bool:
        return self.y == 0 and self.z == 0

    def lee_weight(self) -> int:
        """0, 1, 2, 1 for 0, 1, u, 1 + u respectively."""
        return self.z + (self.y ^ self.z)


#: All four ring elements, handy for exhaustive scalar checks.
Z2U_ELEMENTS: Tuple[Z2uElement, ...] = (
    Z2uElement(0, 0),
    Z2uElement(1, 0),
    Z2uElement(0, 1),
    Z2uElement(1, 1),
)


@dataclass(frozen=True)
class MixedWord:
    """Message (p, q + u*r) with p, q, r binary vectors of a common length m.

    Scalar action of y + u*z sends (p, q + u*r) to (y*p, y*q + u*(y*r + z*q)).
    """

    p: BitVec
    q: BitVec
    r: BitVec

    def __post_init__(self) -> None:
        if not (self.p.m == self.q.m == self.r.m):
            raise ValueError(
                f"component dimensions differ: {self.p.m}, {self.q.m}, {self.r.m}"
            )

    @property
    def m(self) -> int:
        return self.p.m

    @classmethod
    def zero(cls, m: int) -> "MixedWord":
        return cls(BitVec(0, m), BitVec(0, m), BitVec(0, m))

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero() and self.r.is_zero()

    def __add__(self, other: "MixedWord") -> "MixedWord":
        return MixedWord(self.p ^ other.p, self.q ^ other.q, self.r ^ other.r)

    def scale(self, alpha: Z2uElement) -> "MixedWord":
        m = self.m
        p = self.p.bits if alpha.y else 0
        q = self.q.bits if alpha.y else 0
        r = (self.r.bits if alpha.y else 0) ^ (self.q.bits if alpha.z else 0)
        return MixedWord(BitVec(p, m), BitVec(q, m), BitVec(r, m))


@dataclass(frozen=True)
class CodewordZ2u:
    """Length-n word over Z2[u], entry i equal to Q_i + u * R_i."""

    Q: int  # packed unit parts
    R: int  # packed u parts
    n: int  # number of entries

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"length must be positive, got {self.n}")
        top = 1 << self.n
        if not (0 <= self.Q < top and 0 <= self.R < top):
            raise ValueError(f"component masks exceed length {self.n}")

    def entry(self, i: int) -> Z2uElement:
        """Entry at 1-based position i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return Z2uElement(self.Q >> (i - 1) & 1, self.R >> (i - 1) & 1)

    def is_zero(self) -> bool:
        return self.Q == 0 and self.R == 0

    def __add__(self, other: "CodewordZ2u") -> "CodewordZ2u":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return CodewordZ2u(self.Q ^ other.Q, self.R ^ other.R, self.n)

    # additive inverse equals the word itself in characteristic 2
    __sub__ = __add__

    def scale(self, alpha: Z2uElement) -> "CodewordZ2u":
        Q = self.Q if alpha.y else 0
        R = (self.R if alpha.y else 0) ^ (self.Q if alpha.z else 0)
        return CodewordZ2u(Q, R, self.n)


@dataclass(frozen=True)
class BinaryWord:
    """Plain binary word of length n, packed like BitVec but of any length."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"length must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#x} out of range for length {self.n}")

    def weight(self) -> int:
        return self.bits.bit_count()


def gray_map_elem(e: Z2uElement) -> Tuple[int, int]:
    """Image (z, y + z) of y + u*z under the Gray map."""
    return (e.z, e.y ^ e.z)


def gray_map_word(w: CodewordZ2u) -> BinaryWord:
    """Entrywise Gray image (R, Q + R) of a word, length doubling to 2n."""
    return BinaryWord(w.R | ((w.Q ^ w.R) << w.n), 2 * w.n)


def lee_weight(w: CodewordZ2u) -> int:
    """Lee weight, the Hamming weight of the Gray image."""
    return w.R.bit_count() + (w.Q ^ w.R).bit_count()


def inner_product_mixed(a: MixedWord, t1: BitVec, t2: BitVec, t3: BitVec) -> Z2uElement:
    """Pairing of a message with one defining triple.

    The value is <q, t2> + u * (<p, t1> + <q, t3> + <r, t2>), the entry the
    triple (t1, t2, t3) contributes to the codeword of a = (p, q + u*r).
    """
    y = parity_dot(a.q, t2)
    z = parity_dot(a.p, t1) ^ parity_dot(a.q, t3) ^ parity_dot(a.r, t2)
    return Z2uElement(y, z)


__all__: List[str] = [
    "BitVec",
    "Z2uElement",
    "Z2U_ELEMENTS",
    "MixedWord",
    "CodewordZ2u",
    "BinaryWord",
    "parity_dot",
    "gray_map_elem",
    "gray_map_word",
    "lee_weight",
    "inner_product_mixed",
]
