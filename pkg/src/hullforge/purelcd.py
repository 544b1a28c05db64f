"""Pure-LCD decisions by exhaustive square-class scan, the [I_k : I_k]
pure family, and the even-characteristic conjecture hunt.

The scan's reduction: the Gram of a scaled code depends only on the
coordinatewise squares u = a*a, and permutations never change the hull
dimension, so quantifying over every monomial equivalent collapses to
quantifying over u in (nonzero squares)^n.  Classes are scanned in
lexicographic order and the first singular Gram is returned as a
canonical witness; the all-ones class comes first, so a non-LCD input
fails immediately on its own Gram.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass
from itertools import islice, product

from . import _kernels
from .code import MAX_ENUMERATION, LinearCode
from .errors import BudgetExceeded, MinusOneIsSquare, WrongCharacteristic
from .gf import FieldSpec
from .hulltune import DEFAULT_SEED, _case1_index, _case2_support

DEFAULT_SCAN_BUDGET = 10 ** 7


@dataclass(frozen=True)
class PurityWitness:
    """A square-class vector u (with a root vector a, a*a = u) whose
    scaling gives the code a hull of dimension h >= 1."""

    u: tuple[int, ...]
    a: tuple[int, ...]
    h: int


@dataclass(frozen=True)
class PurityReport:
    verdict: str  # "pure" | "not-pure"
    checked: int
    classes_total: int
    witness: PurityWitness | None
    work_units: int


@dataclass(frozen=True)
class Specimen:
    """A code archived by the conjecture scan, with its purity report."""

    index: int
    code: LinearCode
    purity: PurityReport
    tags: tuple[str, ...]


@dataclass(frozen=True)
class ScanReport:
    q: int
    n: int
    k: int
    mode: str
    seed: int | None
    codes_scanned: int
    classes_per_code: int
    pure_count: int
    specimens: tuple[Specimen, ...]
    escapees: tuple[Specimen, ...]


def _decode_class(rank: int, classes, n: int) -> tuple[int, ...]:
    s = len(classes)
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        digits[i] = rank % s
        rank //= s
    return tuple(classes[d] for d in digits)


def _first_singular_class(code: LinearCode, classes, start: int, stop: int) -> int:
    spec = code.spec
    n, k = code.n, code.k
    if spec.supports_kernels:
        mul, add, neg, inv = spec.kernel_tables()
        rows = code.G.rows_values()
        terms = array("H", (spec.mul(rows[i][t], rows[j][t])
                            for t in range(n)
                            for i in range(k)
                            for j in range(k)))
        return _kernels.first_singular_class(
            terms, n, k, spec.q, array("H", classes), mul, add, neg, inv,
            start, stop)
    for offset, u in enumerate(islice(product(classes, repeat=n), start, stop)):
        if code.G.gram_scaled(u).rank() < k:
            return start + offset
    return -1


def is_pure_lcd(code: LinearCode, work_budget: int = DEFAULT_SCAN_BUDGET) -> PurityReport:
    """Scan every square-class vector in lexicographic order; the first
    singular scaled Gram is the canonical not-pure witness."""
    spec = code.spec
    classes = spec.nonzero_square_values()
    total = len(classes) ** code.n
    if total > min(work_budget, MAX_ENUMERATION):
        raise BudgetExceeded("square-class scan", total,
                             min(work_budget, MAX_ENUMERATION))
    rank = _first_singular_class(code, classes, 0, total)
    if rank < 0:
        return PurityReport("pure", total, total, None, total)
    u = _decode_class(rank, classes, code.n)
    a = tuple(spec.sqrt(v) for v in u)
    h = code.k - code.G.gram_scaled(u).rank()
    assert h >= 1
    return PurityReport("not-pure", rank + 1, total, PurityWitness(u, a, h),
                        rank + 1)


def pure_family(spec: FieldSpec, k: int,
                verify_budget: int = DEFAULT_SCAN_BUDGET) -> LinearCode:
    """The [2k, k] code with generator [I_k : I_k]; pure LCD whenever -1
    is not a square.  Re-verified by a full scan when it fits the budget."""
    if k < 1:
        raise ValueError(f"k={k} must be positive")
    if spec.is_square(spec.neg(1)):
        raise MinusOneIsSquare(f"-1 is a square in {spec}")
    rows = [[1 if (j == i or j == i + k) else 0 for j in range(2 * k)]
            for i in range(k)]
    code = LinearCode(spec, rows)
    assert code.is_lcd()
    if len(spec.nonzero_square_values()) ** (2 * k) <= verify_budget:
        report = is_pure_lcd(code, verify_budget)
        assert report.verdict == "pure", "family member failed its purity scan"
    return code


def _escapes_theorem42(code: LinearCode) -> bool:
    """True when an LCD code over GF(2^t) satisfies neither determinant
    hypothesis of the even-characteristic construction."""
    std, _ = code.standard_form()
    M = std.gram()
    spec = code.spec
    return _case1_index(spec, M) is None and _case2_support(spec, M) is None


def conjecture_scan(spec: FieldSpec, n: int, k: int, mode: str = "exhaustive",
                    seed: int = DEFAULT_SEED, samples: int = 100,
                    budget: int = DEFAULT_SCAN_BUDGET) -> ScanReport:
    """Scan standard-form [n, k] codes over GF(2^t) for pure LCD members.

    Every code [I_k : P] is given a full square-class scan (in even
    characteristic every nonzero element is a square, so that means all
    (q-1)^n scalings).  Pure finds are archived as specimens, never
    treated as failures; LCD codes that escape both determinant
    hypotheses (e.g. Gram = I_k) are tagged and archived too.
    """
    if spec.p != 2 or spec.m == 1:
        raise WrongCharacteristic(f"conjecture scan needs q = 2^t, t > 1, got {spec}")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    q = spec.q
    classes_per_code = (q - 1) ** n
    space = q ** (k * (n - k))
    if mode == "exhaustive":
        indices = range(space)
    else:
        rng = random.Random(seed)
        indices = [rng.randrange(space) for _ in range(samples)]
    work = len(indices) * classes_per_code
    if work > min(budget, MAX_ENUMERATION):
        raise BudgetExceeded("conjecture scan", work,
                             min(budget, MAX_ENUMERATION))

    width = n - k
    specimens = []
    escapees = []
    pure_count = 0
    for idx in indices:
        enc = idx
        rows = []
        for i in range(k):
            row = [1 if j == i else 0 for j in range(k)]
            for _ in range(width):
                row.append(enc % q)
                enc //= q
            rows.append(row)
        code = LinearCode(spec, rows)
        purity = is_pure_lcd(code, classes_per_code)
        if purity.verdict == "pure":
            pure_count += 1
            specimens.append(Specimen(idx, code, purity, ("pure",)))
        if code.is_lcd() and _escapes_theorem42(code):
            escapees.append(Specimen(idx, code, purity, ("escapes-theorem42",)))
    return ScanReport(q, n, k, mode, seed if mode == "sampled" else None,
                      len(indices), classes_per_code, pure_count,
                      tuple(specimens), tuple(escapees))
