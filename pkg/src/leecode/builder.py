"""Construction of the codes and everything computed by direct enumeration.

The defining set L is the Cartesian product of the three complement lists,
ordered lexicographically by (t1, t2, t3).  A message a = (p, q + u*r)
encodes to the word whose entry at a triple is

    <q, t2> + u * (<p, t1> + <q, t3> + <r, t2>).

Enumeration works on whole codewords at once.  For each product factor and
each x in Z2^m we precompute the packed |L|-bit word whose bit i equals the
parity <x, t> against that factor's member in the i-th triple.  Each of the
three words is periodic in the lex index, so it is a short pattern times a
repunit.  A message's codeword components are then three xors:

    Q = T2[q],    R = T1[p] ^ T3[q] ^ T2[r],

and its Lee weight is popcount(R) + popcount(Q ^ R).  The 2^{3m} messages
cost a handful of big integer operations each.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from .ring import BitVec, CodewordZ2u, MixedWord
from .simplicial import SupportSet, complement_members


@dataclass(frozen=True)
class WeightDistribution:
    """Multiset of Lee weights, at message or codeword granularity."""

    entries: Dict[int, int]  # weight -> frequency, zero frequencies dropped
    level: str  # "message" or "codeword"
    total: int  # sum of the frequencies

    def __post_init__(self) -> None:
        if self.level not in ("message", "codeword"):
            raise ValueError(f"unknown level {self.level!r}")
        if any(w < 0 for w in self.entries):
            raise ValueError("negative weight")
        if any(f <= 0 for f in self.entries.values()):
            raise ValueError("frequencies must be positive")
        if self.total != sum(self.entries.values()):
            raise ValueError(
                f"total {self.total} != sum of frequencies {sum(self.entries.values())}"
            )

    @classmethod
    def from_counts(cls, counts: Dict[int, int], level: str) -> "WeightDistribution":
        entries = {w: f for w, f in sorted(counts.items()) if f}
        return cls(entries, level, sum(entries.values()))

    def weights(self) -> List[int]:
        return sorted(self.entries)

    def frequency(self, weight: int) -> int:
        return self.entries.get(weight, 0)

    def min_nonzero_weight(self) -> int:
        nz = [w for w in self.entries if w > 0]
        if not nz:
            raise ValueError("distribution has no nonzero weight")
        return min(nz)

    def max_weight(self) -> int:
        return max(self.entries)

    def nonzero_weight_count(self) -> int:
        return sum(1 for w in self.entries if w > 0)


@dataclass(frozen=True)
class DefiningSet:
    """Product of the three complement lists, with the packed parity tables."""

    m: int
    D: SupportSet
    E: SupportSet
    F: SupportSet
    c1: Tuple[int, ...]  # complement of the complex of D, ascending masks
    c2: Tuple[int, ...]
    c3: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.c1) * len(self.c2) * len(self.c3)

    @property
    def length(self) -> int:
        return len(self)

    @cached_property
    def triples(self) -> Tuple[Tuple[BitVec, BitVec, BitVec], ...]:
        """The defining triples in lex order by (t1, t2, t3)."""
        m = self.m
        return tuple(
            (BitVec(t1, m), BitVec(t2, m), BitVec(t3, m))
            for t1 in self.c1
            for t2 in self.c2
            for t3 in self.c3
        )

    @cached_property
    def _tables(self) -> Tuple[List[int], List[int], List[int]]:
        n1, n2, n3 = len(self.c1), len(self.c2), len(self.c3)
        t1 = _expanded_parity_words(self.c1, self.m, n2 * n3, 1)
        t2 = _expanded_parity_words(self.c2, self.m, n3, n1)
        t3 = _expanded_parity_words(self.c3, self.m, 1, n1 * n2)
        return t1, t2, t3

    def parity_tables(self) -> Tuple[List[int], List[int], List[int]]:
        """Per factor tables T with T[x] the packed word of parities <x, t>.

        Bit i of T1[x] is <x, t1> for the i-th triple in lex order, and
        likewise for T2, T3 against the second and third components.  Each
        table is indexed by all 2^m values of x and is xor linear in x.
        """
        return self._tables


def _expanded_parity_words(
    masks: Tuple[int, ...], m: int, run_len: int, repeats: int
) -> List[int]:
    # Factor j of the product contributes a run of run_len consecutive lex
    # indices, and the whole width-(len(masks) * run_len) pattern recurs
    # `repeats` times.  Replication is one multiply by the base-2^width
    # repunit, so each table entry is built in O(len(masks)) int ops.
    width = len(masks) * run_len
    run = (1 << run_len) - 1
    repunit = ((1 << (width * repeats)) - 1) // ((1 << width) - 1)
    out = []
    for x in range(1 << m):
        pattern = 0
        for j, t in enumerate(masks):
            if (x & t).bit_count() & 1:
                pattern |= run << (j * run_len)
        out.append(pattern * repunit)
    return out


def build_defining_set(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet
) -> DefiningSet:
    """Assemble the defining set for supports d, e, f over Z2^m."""
    for name, s in (("D", d), ("E", e), ("F", f)):
        if s.m != m:
            raise ValueError(f"support {name} lives in dimension {s.m}, not {m}")
    c1 = tuple(v.bits for v in complement_members(d))
    c2 = tuple(v.bits for v in complement_members(e))
    c3 = tuple(v.bits for v in complement_members(f))
    return DefiningSet(m, d, e, f, c1, c2, c3)


def encode(a: MixedWord, defining: DefiningSet) -> CodewordZ2u:
    """Codeword of the message a, one entry per defining triple."""
    if a.m != defining.m:
        raise ValueError(f"message dimension {a.m} != {defining.m}")
    t1, t2, t3 = defining.parity_tables()
    q = t2[a.q.bits]
    r = t1[a.p.bits] ^ t3[a.q.bits] ^ t2[a.r.bits]
    return CodewordZ2u(q, r, len(defining))


def _message_weight_counts(defining: DefiningSet) -> Dict[int, int]:
    # One pass over all 2^{3m} messages; bucket frequencies by Lee weight.
    t1, t2, t3 = defining.parity_tables()
    counts = [0] * (2 * len(defining) + 1)
    top = 1 << defining.m
    for p in range(top):
        wp = t1[p]
        for q in range(top):
            base = wp ^ t3[q]
            for r in range(top):
                rw = base ^ t2[r]
                qrw = base ^ t2[q ^ r]
                counts[rw.bit_count() + qrw.bit_count()] += 1
    return {w: f for w, f in enumerate(counts) if f}


def brute_force_distribution(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet
) -> Tuple[WeightDistribution, WeightDistribution]:
    """Lee weight distribution by full enumeration of all 2^{3m} messages.

    Returns the message level distribution and the codeword level one.  The
    encoder is additive, so every codeword has exactly |kernel| preimages
    and the message frequencies divide down uniformly; the weight-0 bucket
    is the kernel itself.
    """
    counts = _message_weight_counts(build_defining_set(m, d, e, f))
    kernel_size = counts[0]
    cw_counts = {}
    for w, freq in counts.items():
        if freq % kernel_size:
            raise AssertionError(
                f"frequency {freq} at weight {w} not divisible by kernel "
                f"size {kernel_size}"
            )
        cw_counts[w] = freq // kernel_size
    message = WeightDistribution.from_counts(counts, "message")
    codeword = WeightDistribution.from_counts(cw_counts, "codeword")
    return message, codeword


def kernel(m: int, d: SupportSet, e: SupportSet, f: SupportSet) -> List[MixedWord]:
    """All messages that encode to the zero word, by exhaustive search."""
    defining = build_defining_set(m, d, e, f)
    t1, t2, t3 = defining.parity_tables()
    top = 1 << m
    found = []
    for p in range(top):
        wp = t1[p]
        for q in range(top):
            base = wp ^ t3[q]
            qword = t2[q]
            for r in range(top):
                rw = base ^ t2[r]
                if rw == 0 and qword == 0:
                    found.append(
                        MixedWord(BitVec(p, m), BitVec(q, m), BitVec(r, m))
                    )
    return found


def distinct_codeword_distribution(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet
) -> WeightDistribution:
    """Codeword level distribution via hashing of the materialized words.

    Independent of the kernel bookkeeping in brute_force_distribution, at
    the price of storing every distinct (Q, R) pair; meant for small m.
    """
    defining = build_defining_set(m, d, e, f)
    t1, t2, t3 = defining.parity_tables()
    n = len(defining)
    top = 1 << m
    seen: Dict[int, int] = {}
    for p in range(top):
        wp = t1[p]
        for q in range(top):
            base = wp ^ t3[q]
            qword = t2[q]
            for r in range(top):
                rw = base ^ t2[r]
                key = qword | (rw << n)
                if key not in seen:
                    seen[key] = rw.bit_count() + (qword ^ rw).bit_count()
    counts: Dict[int, int] = {}
    for w in seen.values():
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution.from_counts(counts, "codeword")


__all__ = [
    "WeightDistribution",
    "DefiningSet",
    "build_defining_set",
    "encode",
    "brute_force_distribution",
    "kernel",
    "distinct_codeword_distribution",
]
