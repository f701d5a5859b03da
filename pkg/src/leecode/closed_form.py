"""Closed forms for the Lee weights, computed without touching a codeword.

Everything here follows from one identity: the sum of (-1)^<x, t> over the
complement of the complex of a support S is

    2^m * [x == 0] - 2^|S| * [x avoids S],

so the weight of the codeword of a = (p, q + u*r) collapses to a product of
three such sums for each of the two Gray halves.  Grouping messages by
which of p, q, r, q+r vanish or avoid the relevant supports yields a short
table of weight rows, each an offset from the base weight |L| with a count
in closed form; all remaining messages sit exactly at |L|.

The row table only sees the sizes |D|, |E|, |F| and the interaction of E
with F through |E union F| and |E intersect F|.  Distinct rows can land on
the same numeric weight, so building a distribution merges rows by value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .builder import WeightDistribution
from .ring import BitVec, MixedWord
from .simplicial import SupportSet, eval_H_at_signs


@dataclass(frozen=True)
class WeightRow:
    """One structural case of messages: a weight, how many, and from what."""

    weight: int
    frequency: int
    case_labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        if self.weight < 0:
            raise ValueError(f"negative weight {self.weight}")
        if self.frequency < 0:
            raise ValueError(f"negative frequency {self.frequency}")


def complement_sign_sum(s: SupportSet, x: BitVec) -> int:
    """Sum of (-1)^<x, t> over the vectors t outside the complex of s."""
    full = (1 << s.m) if x.is_zero() else 0
    return full - eval_H_at_signs(s, x)


def _check_instance(m: int, d: SupportSet, e: SupportSet, f: SupportSet) -> None:
    for name, s in (("D", d), ("E", e), ("F", f)):
        if s.m != m:
            raise ValueError(f"support {name} lives in dimension {s.m}, not {m}")


def lee_weight_formula(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet, a: MixedWord
) -> int:
    """Lee weight of the codeword of a single message, in closed form."""
    _check_instance(m, d, e, f)
    if a.m != m:
        raise ValueError(f"message dimension {a.m} != {m}")
    length = ((1 << m) - (1 << d.size)) * ((1 << m) - (1 << e.size)) * (
        (1 << m) - (1 << f.size)
    )
    sd = complement_sign_sum(d, a.p)
    sf = complement_sign_sum(f, a.q)
    se = complement_sign_sum(e, a.r) + complement_sign_sum(e, a.q ^ a.r)
    total = sd * sf * se
    # the two Gray halves always pair up to an even total
    assert total % 2 == 0, (m, d, e, f, a)
    return length - total // 2


def weight_rows(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet
) -> List[WeightRow]:
    """The weight table of an instance, one row per structural case.

    Rows whose case cannot occur for these supports (count zero) are
    omitted.  The final row collects every remaining message at the base
    weight |L|; a negative remainder cannot happen and raises.  Rows are
    not merged by weight here, see distribution_formula for that.
    """
    _check_instance(m, d, e, f)
    pd, pe, pf = 1 << d.size, 1 << e.size, 1 << f.size
    big_d, big_e, big_f = (1 << m) - pd, (1 << m) - pe, (1 << m) - pf
    length = big_d * big_e * big_f

    # counts of vectors avoiding the various supports, zero included
    out_d = 1 << (m - d.size)
    out_e = 1 << (m - e.size)
    out_f = 1 << (m - f.size)
    out_ef = 1 << (m - (e.mask.bits | f.mask.bits).bit_count())
    # nonzero q avoiding F that meet E split off out_ef of the out_f choices
    e_not_f = e.size - (e.mask.bits & f.mask.bits).bit_count()

    rows: List[WeightRow] = [WeightRow(0, 1, ("a = 0",))]

    def add(label: str, freq: int, offset: int, halved: bool = False) -> None:
        # Cases that cannot occur are skipped before the offset is touched;
        # whenever a halved case does occur its offset numerator is even.
        if not freq:
            return
        if halved:
            assert offset % 2 == 0, (label, offset)
            offset //= 2
        rows.append(WeightRow(length + offset, freq, (label,)))

    add(
        "p=0, q=0, r avoids E",
        out_e - 1,
        big_d * pe * big_f,
    )
    add(
        "p=0, r in {0, q}, q avoids F and meets E",
        2 * out_ef * ((1 << e_not_f) - 1),
        big_d * big_e * pf,
        halved=True,
    )
    add(
        "p=0, r in {0, q}, q avoids E and F",
        2 * (out_ef - 1),
        big_d * big_e * pf - big_d * pe * pf,
        halved=True,
    )
    add(
        "p=0, q avoids F, exactly one of r, q+r avoids E",
        2 * (out_e - 1) * (out_f - out_ef),
        -(big_d * pe * pf),
        halved=True,
    )
    add(
        "p=0, q avoids F, both r and q+r avoid E",
        (out_e - 2) * (out_ef - 1),
        -(big_d * pe * pf),
    )
    add(
        "p avoids D, q=0, r=0",
        out_d - 1,
        pd * big_e * big_f,
    )
    add(
        "p avoids D, q=0, r avoids E",
        (out_d - 1) * (out_e - 1),
        -(pd * pe * big_f),
    )
    add(
        "p avoids D, r in {0, q}, q avoids F and meets E",
        2 * (out_d - 1) * out_ef * ((1 << e_not_f) - 1),
        -(pd * big_e * pf),
        halved=True,
    )
    add(
        "p avoids D, r in {0, q}, q avoids E and F",
        2 * (out_d - 1) * (out_ef - 1),
        -(pd * big_e * pf - pd * pe * pf),
        halved=True,
    )
    add(
        "p avoids D, q avoids F, exactly one of r, q+r avoids E",
        2 * (out_d - 1) * (out_e - 1) * (out_f - out_ef),
        pd * pe * pf,
        halved=True,
    )
    add(
        "p avoids D, q avoids F, both r and q+r avoid E",
        (out_d - 1) * (out_e - 2) * (out_ef - 1),
        pd * pe * pf,
    )
    remainder = (1 << (3 * m)) - sum(row.frequency for row in rows)
    if remainder < 0:
        raise ValueError(f"case counts exceed the message space by {-remainder}")
    rows.append(WeightRow(length, remainder, ("all remaining messages",)))
    return rows


def kernel_size_formula(m: int, d: SupportSet, e: SupportSet, f: SupportSet) -> int:
    """Number of messages encoding to zero: 2 when both |D| and |E| equal
    m - 1 (the third support plays no part), else 1."""
    _check_instance(m, d, e, f)
    return 2 if d.size == m - 1 and e.size == m - 1 else 1


def code_size_formula(m: int, d: SupportSet, e: SupportSet, f: SupportSet) -> int:
    """Number of distinct codewords, 2^{3m} cut in half exactly in the
    nontrivial kernel case."""
    return (1 << (3 * m)) // kernel_size_formula(m, d, e, f)


def distribution_formula(
    m: int, d: SupportSet, e: SupportSet, f: SupportSet
) -> Tuple[WeightDistribution, WeightDistribution]:
    """Lee weight distributions from the row table, merged by weight.

    Returns the message level and codeword level distributions, the latter
    obtained by dividing every frequency by the kernel size.
    """
    counts: Dict[int, int] = {}
    for row in weight_rows(m, d, e, f):
        counts[row.weight] = counts.get(row.weight, 0) + row.frequency
    message = WeightDistribution.from_counts(counts, "message")
    kernel_size = kernel_size_formula(m, d, e, f)
    cw_counts = {}
    for w, freq in message.entries.items():
        if freq % kernel_size:
            raise AssertionError(
                f"frequency {freq} at weight {w} not divisible by kernel "
                f"size {kernel_size}"
            )
        cw_counts[w] = freq // kernel_size
    return message, WeightDistribution.from_counts(cw_counts, "codeword")


def enumerator_string(dist: WeightDistribution, gray_length: int) -> str:
    """Two variable weight enumerator as a string, terms by ascending weight.

    A weight w contributes frequency * X^{gray_length - w} Y^w, with unit
    coefficients and zero exponents left out, e.g. "X^128 + 2X^96Y^32".
    """
    parts = []
    for w in dist.weights():
        if w > gray_length:
            raise ValueError(f"weight {w} exceeds the code length {gray_length}")
        freq = dist.entries[w]
        term = "" if freq == 1 else str(freq)
        if gray_length - w:
            term += f"X^{gray_length - w}"
        if w:
            term += f"Y^{w}"
        parts.append(term or "1")
    return " + ".join(parts)


__all__ = [
    "WeightRow",
    "complement_sign_sum",
    "lee_weight_formula",
    "weight_rows",
    "kernel_size_formula",
    "code_size_formula",
    "distribution_formula",
    "enumerator_string",
]
