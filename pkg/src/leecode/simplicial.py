"""Simplicial complexes generated by a single maximal face, and the
subset counting formulas the weight distributions are built from.

A support set S is a proper subset of [m] = {1, ..., m}.  The complex it
generates consists of all subsets of S, so membership of a packed vector t
is just ``t & ~mask == 0``.  The codes are defined over the complement of
such a complex, the vectors that contain at least one coordinate outside S.

Throughout, subsets X of [m] are identified with binary vectors via their
indicator, and "X avoids S" means X with S empty intersection (the indicator
chi(X | S) below equals 1 exactly then).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .ring import BitVec


@dataclass(frozen=True)
class SupportSet:
    """Proper subset of [m], the maximal face generating a complex."""

    mask: BitVec  # indicator of the set, never all ones

    def __post_init__(self) -> None:
        if self.mask.bits == (1 << self.mask.m) - 1:
            raise ValueError(
                f"support must be a proper subset of [{self.mask.m}], got all of it"
            )

    @classmethod
    def from_coords(cls, coords, m: int) -> "SupportSet":
        return cls(BitVec.from_coords(coords, m))

    @classmethod
    def empty(cls, m: int) -> "SupportSet":
        return cls(BitVec(0, m))

    @property
    def m(self) -> int:
        return self.mask.m

    @property
    def size(self) -> int:
        return self.mask.weight()

    def coords(self) -> Tuple[int, ...]:
        return self.mask.support()


def chi(x: BitVec, y: BitVec) -> int:
    """1 if the supports of x and y are disjoint, else 0."""
    if x.m != y.m:
        raise ValueError(f"dimension mismatch: {x.m} != {y.m}")
    return 1 if x.bits & y.bits == 0 else 0


def complex_members(s: SupportSet) -> List[BitVec]:
    """All faces of the complex (subsets of s), ascending as packed ints."""
    mask = s.mask.bits
    return [BitVec(t, s.m) for t in range(1 << s.m) if t & ~mask == 0]


def complement_members(s: SupportSet) -> List[BitVec]:
    """All vectors outside the complex, ascending as packed ints."""
    mask = s.mask.bits
    return [BitVec(t, s.m) for t in range(1 << s.m) if t & ~mask != 0]


def eval_H_at_signs(s: SupportSet, p: BitVec) -> int:
    """Sum of (-1)^<p, t> over the faces t of the complex of s.

    The faces of s form a coordinate subcube, so the sum telescopes to
    2^|s| when p avoids s and to 0 otherwise.
    """
    if p.m != s.m:
        raise ValueError(f"dimension mismatch: {p.m} != {s.m}")
    return (1 << s.size) * chi(p, s.mask)


@dataclass(frozen=True)
class DisjointnessCounts:
    """Closed form counts of subsets of [m] classified by avoidance.

    The single set counts partition subsets X by whether X avoids a support
    D (and a second support E).  The pair counts run over ordered pairs
    (X, Y) of distinct nonempty subsets; the score of a pair is the number
    of members of {X, X xor Y} that avoid D, and the pairs are restricted
    by whether Y avoids or meets E.  Fields a counting call does not
    populate stay None.
    """

    # single subsets vs one support D
    disjoint_nonempty: Optional[int] = None  # X nonempty, X avoids D
    meets: Optional[int] = None  # X meets D

    # single subsets vs two supports D, E
    disjoint_both_nonempty: Optional[int] = None  # X nonempty, avoids D and E
    meets_union: Optional[int] = None  # X meets D or E

    # ordered pairs (X, Y), both nonempty, X != Y, Y avoiding E,
    # split by how many of X, X xor Y avoid D
    score0_pairs: Optional[int] = None
    score1_pairs: Optional[int] = None
    score2_pairs: Optional[int] = None

    # single subsets in the four avoid/meet cells against (D, E);
    # the cell where X avoids both is 2^(m - |D union E|) and is omitted
    meets_both: Optional[int] = None
    meets_first_only: Optional[int] = None  # X meets D, avoids E
    meets_second_only: Optional[int] = None  # X avoids D, meets E

    # ordered pairs (X, Y), both nonempty, X != Y, Y meeting E
    meets_pairs_total: Optional[int] = None


def subset_disjointness_counts(d: SupportSet, e: SupportSet) -> DisjointnessCounts:
    """Counts of subsets avoiding d, and of xor pairs scored against d
    with the second component restricted to avoid e."""
    if d.m != e.m:
        raise ValueError(f"dimension mismatch: {d.m} != {e.m}")
    m = d.m
    union = d.mask.bits | e.mask.bits
    nd = m - d.size  # coordinates outside d
    ne = m - e.size
    nu = m - union.bit_count()
    return DisjointnessCounts(
        disjoint_nonempty=(1 << nd) - 1,
        meets=(1 << m) - (1 << nd),
        disjoint_both_nonempty=(1 << nu) - 1,
        meets_union=(1 << m) - (1 << nu),
        score0_pairs=(1 << m) * ((1 << ne) - 1)
        + (1 << nd) * (1 + (1 << nu) - (1 << (ne + 1))),
        score1_pairs=2 * ((1 << nd) - 1) * ((1 << ne) - (1 << nu)),
        score2_pairs=((1 << nd) - 2) * ((1 << nu) - 1),
    )


def meet_pattern_counts(d: SupportSet, e: SupportSet) -> DisjointnessCounts:
    """Counts of subsets in the meet/avoid cells against (d, e), and the
    total of xor pairs whose second component meets e."""
    if d.m != e.m:
        raise ValueError(f"dimension mismatch: {d.m} != {e.m}")
    m = d.m
    inter = d.mask.bits & e.mask.bits
    nu = m - (d.mask.bits | e.mask.bits).bit_count()
    d_only = d.size - inter.bit_count()  # coordinates of d outside e
    e_only = e.size - inter.bit_count()
    ne = m - e.size
    return DisjointnessCounts(
        meets_both=(1 << m)
        - (1 << nu) * ((1 << d_only) + (1 << e_only) - 1),
        meets_first_only=(1 << nu) * ((1 << d_only) - 1),
        meets_second_only=(1 << nu) * ((1 << e_only) - 1),
        meets_pairs_total=((1 << m) - (1 << ne)) * ((1 << m) - 2),
    )


__all__ = [
    "SupportSet",
    "DisjointnessCounts",
    "chi",
    "complex_members",
    "complement_members",
    "eval_H_at_signs",
    "subset_disjointness_counts",
    "meet_pattern_counts",
]
