"""Binary Gray images of the codes: parameters, self orthogonality,
minimality, and the assembled per instance report.

The Gray map doubles the length and turns Lee weight into Hamming weight,
so the image of an instance is a linear binary code of length 2|L| whose
weight enumerator is the Lee enumerator.  Images are packed ints, the low
n bits holding the u part and the high n bits the sum part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .builder import (
    DefiningSet,
    WeightDistribution,
    brute_force_distribution,
    build_defining_set,
)
from .closed_form import distribution_formula, enumerator_string, kernel_size_formula
from .simplicial import SupportSet

#: Materialization guard for gray_image, in estimated bytes.
DEFAULT_BUDGET_BYTES = 64 * 1024 * 1024


@dataclass(frozen=True)
class BinaryCode:
    """Gray image of one instance, possibly without the word list."""

    n: int  # binary length, twice the defining set size
    k: int  # log2 of the number of codewords
    d: int  # minimum nonzero Hamming weight
    generators: Tuple[int, ...]  # images of the unit messages, a spanning set
    words: Optional[Tuple[int, ...]]  # all distinct codewords, or None

    def __post_init__(self) -> None:
        if self.words is not None and len(self.words) != 1 << self.k:
            raise ValueError(
                f"expected {1 << self.k} codewords, got {len(self.words)}"
            )

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.n, self.k, self.d)


def _generator_words(defining: DefiningSet) -> Tuple[int, ...]:
    # Gray images of the 3m unit messages (one per nonzero slot of p, q, r).
    # They span the image; with a nontrivial kernel they are dependent,
    # which is harmless for Gram checks.
    t1, t2, t3 = defining.parity_tables()
    n = len(defining)
    out: List[int] = []
    for j in range(defining.m):
        unit = 1 << j
        for q_word, r_word in (
            (0, t1[unit]),  # p unit: R picks up <p, t1>
            (t2[unit], t3[unit]),  # q unit: Q is <q, t2>, R is <q, t3>
            (0, t2[unit]),  # r unit: R picks up <r, t2>
        ):
            out.append(r_word | ((q_word ^ r_word) << n))
    return tuple(out)


def gray_image(
    m: int,
    d: SupportSet,
    e: SupportSet,
    f: SupportSet,
    max_bytes: Optional[int] = DEFAULT_BUDGET_BYTES,
) -> BinaryCode:
    """Gray image of an instance, by enumeration of the message space.

    The parameters [n, k, d] always come back.  The full word list is
    materialized only when its estimated footprint fits max_bytes (pass
    None to lift the guard); one word per kernel coset, ordered by the
    packed message index of the smaller coset representative.
    """
    defining = build_defining_set(m, d, e, f)
    t1, t2, t3 = defining.parity_tables()
    n = len(defining)
    top = 1 << m

    kernel_packed: List[int] = []
    min_nonzero: Optional[int] = None
    for p in range(top):
        wp = t1[p]
        for q in range(top):
            base = wp ^ t3[q]
            q_word = t2[q]
            for r in range(top):
                r_word = base ^ t2[r]
                w = r_word.bit_count() + (q_word ^ r_word).bit_count()
                if w == 0:
                    kernel_packed.append((p << (2 * m)) | (q << m) | r)
                elif min_nonzero is None or w < min_nonzero:
                    min_nonzero = w

    code_size = (1 << (3 * m)) // len(kernel_packed)
    assert code_size.bit_count() == 1, code_size
    k = code_size.bit_length() - 1
    assert min_nonzero is not None

    words: Optional[Tuple[int, ...]] = None
    estimate = code_size * (28 + n // 4)  # rough per int footprint of 2n bits
    if max_bytes is None or estimate <= max_bytes:
        collected: List[int] = []
        shift = kernel_packed[1] if len(kernel_packed) > 1 else 0
        for p in range(top):
            wp = t1[p]
            for q in range(top):
                base = wp ^ t3[q]
                q_word = t2[q]
                for r in range(top):
                    packed = (p << (2 * m)) | (q << m) | r
                    if shift and packed > packed ^ shift:
                        continue
                    r_word = base ^ t2[r]
                    collected.append(r_word | ((q_word ^ r_word) << n))
        words = tuple(collected)

    return BinaryCode(2 * n, k, min_nonzero, _generator_words(defining), words)


def is_self_orthogonal_exact(code: BinaryCode, full: bool = False) -> bool:
    """Exact Gram check: every pair of spanning words (self pairs included)
    must have even overlap.  With full=True the check runs over all
    materialized codewords instead and errors when they are absent."""
    if full:
        if code.words is None:
            raise ValueError("codewords were not materialized")
        vecs: Tuple[int, ...] = code.words
    else:
        vecs = code.generators
    for i, a in enumerate(vecs):
        for b in vecs[i:]:
            if (a & b).bit_count() & 1:
                return False
    return True


def all_weights_divisible_by_4(dist: WeightDistribution) -> bool:
    """True when every nonzero weight in the distribution is 0 mod 4."""
    return all(w % 4 == 0 for w in dist.entries)


@dataclass(frozen=True)
class ABCheck:
    """Minimum and maximum nonzero weights with the ratio verdict."""

    w_min: int
    w_max: int

    def ratio(self) -> Fraction:
        return Fraction(self.w_min, self.w_max)

    @property
    def minimal(self) -> bool:
        # sufficient condition for minimality: w_min / w_max > 1/2,
        # kept in integers
        return 2 * self.w_min > self.w_max


def ashikhmin_barg_check(dist: WeightDistribution) -> ABCheck:
    """Weight ratio test on a distribution with at least one nonzero weight."""
    nonzero = [w for w in dist.entries if w > 0]
    if not nonzero:
        raise ValueError("distribution has no nonzero weight")
    return ABCheck(min(nonzero), max(nonzero))


def is_minimal_exact(code: BinaryCode) -> bool:
    """Exhaustive cover check: no nonzero codeword's support may contain
    another's.  Requires materialized words."""
    if code.words is None:
        raise ValueError("codewords were not materialized")
    nonzero = sorted((w for w in code.words if w), key=lambda v: (v.bit_count(), v))
    for i, small in enumerate(nonzero):
        for big in nonzero[i + 1 :]:
            if small | big == big:
                return False
    return True


def equal_size_minimality_guarantee(m: int, n: int) -> bool:
    """Whether the equal support size family at size n is known minimal.

    True for 0 <= n <= m - 2.  At n = m - 1 the weight ratio degrades to
    1/4 and nothing is guaranteed either way.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if not 0 <= n <= m - 1:
        raise ValueError(f"size {n} out of range 0..{m - 1}")
    return n <= m - 2


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the command line reports for one instance."""

    m: int
    D: SupportSet
    E: SupportSet
    F: SupportSet
    length: int  # defining set size |L|
    gray_length: int  # 2 |L|
    code_size: int
    kernel_size: int
    distribution: WeightDistribution  # codeword level
    message_distribution: Optional[WeightDistribution]
    enumerator: str
    params: Tuple[int, int, int]
    self_orthogonal: bool
    weights_div4: bool
    ab: ABCheck
    exact_minimal: Optional[bool]  # None when the check was skipped
    guaranteed_minimal: Optional[bool]  # None when no guarantee applies
    distributions_match: Optional[bool]  # compare runs only
    distribution_diff: Tuple[Tuple[str, int, int, int], ...]
    warning: Optional[str]


def _distribution_diff(
    enumerated: WeightDistribution, formula: WeightDistribution, level: str
) -> List[Tuple[str, int, int, int]]:
    weights = sorted(set(enumerated.entries) | set(formula.entries))
    return [
        (level, w, enumerated.frequency(w), formula.frequency(w))
        for w in weights
        if enumerated.frequency(w) != formula.frequency(w)
    ]


def analyze(
    m: int,
    d: SupportSet,
    e: SupportSet,
    f: SupportSet,
    mode: str = "analyze",
    exact_minimal: str = "auto",
    budget_bytes: Optional[int] = DEFAULT_BUDGET_BYTES,
) -> AnalysisReport:
    """Full report for one instance.

    mode selects the distribution engine: "closed" evaluates only the
    closed forms, "brute" only enumerates, "compare" does both and records
    whether they agree, "analyze" trusts the closed forms.  exact_minimal
    is "auto" (run the exhaustive cover check unless mode is "closed"),
    "always" or "never"; the check silently degrades to skipped, with a
    warning, when the word list would blow budget_bytes.
    """
    if mode not in ("analyze", "closed", "brute", "compare"):
        raise ValueError(f"unknown mode {mode!r}")
    if exact_minimal not in ("auto", "always", "never"):
        raise ValueError(f"unknown exact_minimal policy {exact_minimal!r}")

    defining = build_defining_set(m, d, e, f)
    length = len(defining)

    message_closed = codeword_closed = None
    if mode in ("analyze", "closed", "compare"):
        message_closed, codeword_closed = distribution_formula(m, d, e, f)
    message_brute = codeword_brute = None
    if mode in ("brute", "compare"):
        message_brute, codeword_brute = brute_force_distribution(m, d, e, f)

    match: Optional[bool] = None
    diff: List[Tuple[str, int, int, int]] = []
    if mode == "compare":
        assert message_brute and codeword_brute and message_closed and codeword_closed
        diff = _distribution_diff(
            message_brute, message_closed, "message"
        ) + _distribution_diff(codeword_brute, codeword_closed, "codeword")
        match = not diff

    codeword = codeword_brute if mode == "brute" else codeword_closed
    message = message_brute if mode in ("brute", "compare") else message_closed
    assert codeword is not None and message is not None

    if mode == "brute":
        kernel_size = message.frequency(0)
    else:
        kernel_size = kernel_size_formula(m, d, e, f)
    code_size = (1 << (3 * m)) // kernel_size

    want_exact = exact_minimal == "always" or (
        exact_minimal == "auto" and mode != "closed"
    )
    warning = None
    exact: Optional[bool] = None
    if want_exact:
        image = gray_image(m, d, e, f, max_bytes=budget_bytes)
        if image.words is None:
            warning = (
                f"word list estimate exceeds budget of {budget_bytes} bytes, "
                "exact minimality skipped"
            )
        else:
            exact = is_minimal_exact(image)
        params = image.params
        self_orth = is_self_orthogonal_exact(image)
    else:
        k = code_size.bit_length() - 1
        params = (2 * length, k, codeword.min_nonzero_weight())
        probe = BinaryCode(
            2 * length, k, params[2], _generator_words(defining), None
        )
        self_orth = is_self_orthogonal_exact(probe)

    ab = ashikhmin_barg_check(codeword)
    sizes = (d.size, e.size, f.size)
    guaranteed: Optional[bool] = None
    if sizes[0] == sizes[1] == sizes[2] and equal_size_minimality_guarantee(
        m, sizes[0]
    ):
        guaranteed = True

    return AnalysisReport(
        m=m,
        D=d,
        E=e,
        F=f,
        length=length,
        gray_length=2 * length,
        code_size=code_size,
        kernel_size=kernel_size,
        distribution=codeword,
        message_distribution=(
            message if mode in ("brute", "compare") else None
        ),
        enumerator=enumerator_string(codeword, 2 * length),
        params=params,
        self_orthogonal=self_orth,
        weights_div4=all_weights_divisible_by_4(codeword),
        ab=ab,
        exact_minimal=exact,
        guaranteed_minimal=guaranteed,
        distributions_match=match,
        distribution_diff=tuple(diff),
        warning=warning,
    )


__all__ = [
    "DEFAULT_BUDGET_BYTES",
    "BinaryCode",
    "ABCheck",
    "AnalysisReport",
    "gray_image",
    "is_self_orthogonal_exact",
    "all_weights_divisible_by_4",
    "ashikhmin_barg_check",
    "is_minimal_exact",
    "equal_size_minimality_guarantee",
    "analyze",
]
