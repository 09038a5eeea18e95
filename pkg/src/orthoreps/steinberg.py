"""Twisted tensor products of restricted modules and the orthogonal classification.

Every irreducible module of a finite group of one simple type is a twisted
tensor product of restricted modules; twist indices never change the
dimension, self-duality or indicator of a factor, so products are handled
as multisets of restricted factors.  Two assembly modes are exposed:
``class_s_orbit`` keeps a multi-factor product only when all factors are
one and the same module (a Galois orbit of a single module), while
``all_products`` forms every factor combination.  The classifier scans all
types that can reach the target dimension, drops non-self-dual products,
and splits the survivors by Frobenius-Schur indicator.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from . import irreps, root_data
from .arith import is_prime
from .irreps import (
    ExceptionRecord,
    IrrepCandidate,
    candidate_json,
    default_scan_types,
    enumerate_restricted,
)
from .root_data import LieType

__all__ = [
    "MODE_ORBIT",
    "MODE_ALL",
    "TensorCandidate",
    "ExclusionNote",
    "ClassificationReport",
    "Theorem1Evidence",
    "THEOREM1_PRIMES",
    "factorizations",
    "steinberg_products",
    "classify_orthogonal",
    "verify_theorem1",
    "theorem1_sweep",
    "report_json",
    "evidence_json",
]

MODE_ORBIT = "class_s_orbit"
MODE_ALL = "all_products"

# Primes covered by the n = 4*pi classification.
THEOREM1_PRIMES = (17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)


def factorizations(n: int) -> tuple[tuple[int, ...], ...]:
    """All multisets of integers > 1 with product n, as ascending tuples."""
    if n < 2:
        raise ValueError(f"factorizations need n >= 2, got {n}")
    out: list[tuple[int, ...]] = []

    def rec(rem: int, start: int, acc: tuple[int, ...]) -> None:
        for f in range(start, isqrt(rem) + 1):
            if rem % f == 0:
                rec(rem // f, f, acc + (f,))
        out.append(acc + (rem,))

    rec(n, 2, ())
    return tuple(sorted(out, key=lambda fs: (len(fs), fs)))


@dataclass(frozen=True)
class TensorCandidate:
    """A tensor product of restricted modules of one type (twists abstracted)."""

    type_id: LieType
    factors: tuple[IrrepCandidate, ...]
    mode: str
    dim: int
    self_dual: bool
    fs: int
    min_char: int
    non_generic_ell: int | None = None


@dataclass(frozen=True)
class ExclusionNote:
    """One aggregated exclusion rule application during a classification scan."""

    rule: str
    family: str
    ranks: str
    factorization: tuple[int, ...]
    detail: str
    count: int


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    mode: str
    min_char: int
    orthogonal: tuple[TensorCandidate, ...]
    symplectic: tuple[TensorCandidate, ...]
    excluded_non_self_dual: int
    notes: tuple[ExclusionNote, ...]


@dataclass(frozen=True)
class Theorem1Evidence:
    pi: int
    n: int
    passed: bool
    orthogonal: tuple[TensorCandidate, ...]
    symplectic_has_c_natural: bool
    symplectic_has_a1_power: bool
    report: ClassificationReport


def _tensor(type_id: LieType, factors: Sequence[IrrepCandidate], mode: str,
            non_generic_ell: int | None = None) -> TensorCandidate:
    factors = tuple(sorted(factors, key=lambda c: (-c.dim, c.weight)))
    dim = 1
    for c in factors:
        dim *= c.dim
    self_dual = all(c.self_dual for c in factors)
    fs = 0
    if self_dual:
        fs = 1
        for c in factors:
            fs *= c.fs
    return TensorCandidate(
        type_id=type_id,
        factors=factors,
        mode=mode,
        dim=dim,
        self_dual=self_dual,
        fs=fs,
        min_char=max(c.min_char for c in factors),
        non_generic_ell=non_generic_ell,
    )


def _assemble(
    type_id: LieType,
    facts: Sequence[tuple[int, ...]],
    by_dim: dict[int, list[IrrepCandidate]],
    mode: str,
) -> tuple[list[TensorCandidate], list[tuple[str, tuple[int, ...], str, int]]]:
    """Products of this type for each factorization, plus raw exclusion events.

    Events are (rule, factorization, detail, count) tuples, aggregated later
    across ranks.
    """
    products: list[TensorCandidate] = []
    events: list[tuple[str, tuple[int, ...], str, int]] = []
    for fact in facts:
        missing = sorted(d for d in set(fact) if d not in by_dim)
        if missing:
            events.append(
                ("missing-factor-dimension", fact, f"no restricted module of dimension {missing[0]}", 1)
            )
            continue
        if len(fact) == 1:
            products.extend(_tensor(type_id, (c,), mode) for c in by_dim[fact[0]])
            continue
        counts = {d: fact.count(d) for d in set(fact)}
        total = 1
        for d, r in counts.items():
            k = len(by_dim[d])
            total *= _multichoose(k, r)
        if mode == MODE_ORBIT:
            if len(set(fact)) == 1:
                d = fact[0]
                products.extend(_tensor(type_id, (c,) * len(fact), mode) for c in by_dim[d])
                skipped = total - len(by_dim[d])
            else:
                skipped = total
            if skipped:
                events.append(
                    ("orbit-restriction", fact,
                     "multi-factor products must repeat a single module", skipped)
                )
        else:
            pools = [
                itertools.combinations_with_replacement(by_dim[d], counts[d])
                for d in sorted(counts)
            ]
            for combo in itertools.product(*pools):
                factors = tuple(itertools.chain.from_iterable(combo))
                products.append(_tensor(type_id, factors, mode))
    return products, events


def _multichoose(k: int, r: int) -> int:
    from math import comb

    return comb(k + r - 1, r)


def steinberg_products(
    type_id: LieType,
    n: int,
    mode: str = MODE_ORBIT,
    exceptions: Sequence[ExceptionRecord] = (),
) -> list[TensorCandidate]:
    """All tensor-product realizations of dimension n within one type."""
    _check_mode(mode)
    if n < 2:
        raise ValueError(f"target dimension must be >= 2, got {n}")
    cands = enumerate_restricted(type_id, n, exceptions)
    by_dim: dict[int, list[IrrepCandidate]] = {}
    for c in cands:
        if any(c.weight):
            by_dim.setdefault(c.dim, []).append(c)
    products, _ = _assemble(type_id, factorizations(n), by_dim, mode)
    products.sort(key=_product_sort_key)
    return products


def _product_sort_key(tc: TensorCandidate):
    return (
        len(tc.factors),
        tuple(-f.dim for f in tc.factors),
        tuple(f.weight for f in tc.factors),
    )


def _check_mode(mode: str) -> None:
    if mode not in (MODE_ORBIT, MODE_ALL):
        raise ValueError(f"mode must be {MODE_ORBIT!r} or {MODE_ALL!r}, got {mode!r}")


def _scan_one_type(
    type_id: LieType,
    facts: Sequence[tuple[int, ...]],
    n: int,
    mode: str,
    min_char: int,
    exceptions: Sequence[ExceptionRecord],
):
    cands = enumerate_restricted(type_id, n, exceptions)
    by_dim: dict[int, list[IrrepCandidate]] = {}
    for c in cands:
        if any(c.weight):
            by_dim.setdefault(c.dim, []).append(c)
    products, events = _assemble(type_id, facts, by_dim, mode)

    kept: list[TensorCandidate] = []
    non_self_dual = 0
    for tc in products:
        if not tc.self_dual:
            non_self_dual += 1
            example = ",".join(str(list(f.weight)) for f in tc.factors[:1])
            events.append(
                ("non-self-dual", _fact_of(tc), f"e.g. weight {example}", 1)
            )
            continue
        if tc.min_char > min_char:
            events.append(
                ("characteristic-floor", _fact_of(tc),
                 f"needs characteristic >= {tc.min_char}, scan fixed {min_char}", 1)
            )
            continue
        kept.append(tc)

    # Non-generic candidates contributed by ingested exception records: they
    # hold only at the record's characteristic and are flagged as such.
    for rec in exceptions:
        if rec.type_id != type_id or rec.corrected_dim != n:
            continue
        scan = irreps._scan_data(type_id)
        if tuple(rec.weight[scan.perm[i]] for i in range(type_id.rank)) != rec.weight:
            continue
        parity = sum(c * a for c, a in zip(scan.two_rho, rec.weight)) % 2
        factor = IrrepCandidate(
            type_id=type_id,
            weight=rec.weight,
            dim=rec.corrected_dim,
            self_dual=True,
            fs=-1 if parity else 1,
            epsilon=scan.epsilon,
            min_char=max(20, 1 + max(rec.weight, default=0)),
        )
        kept.append(_tensor(type_id, (factor,), mode, non_generic_ell=rec.ell))
    return kept, events, non_self_dual


def _fact_of(tc: TensorCandidate) -> tuple[int, ...]:
    return tuple(sorted(f.dim for f in tc.factors))


def _compress_ranks(ranks: list[int]) -> str:
    runs = []
    start = prev = ranks[0]
    for r in ranks[1:]:
        if r == prev + 1:
            prev = r
            continue
        runs.append((start, prev))
        start = prev = r
    runs.append((start, prev))
    return ",".join(f"{a}" if a == b else f"{a}..{b}" for a, b in runs)


def classify_orthogonal(
    n: int,
    min_char: int | None = None,
    mode: str = MODE_ORBIT,
    exceptions: Sequence[ExceptionRecord] = (),
    workers: int | None = None,
) -> ClassificationReport:
    """Classify all orthogonal/symplectic tensor candidates of dimension n.

    min_char fixes the characteristic regime the report is valid for
    (dimensions are generic there); it defaults to max(20, n + 1) and must
    be at least 20.  The scan covers every type whose natural module fits
    in dimension n, assembles tensor candidates per factorization of n,
    drops non-self-dual products, and splits the rest by indicator.  Every
    dropped branch is recorded in the exclusion notes.
    """
    if n < 2 or n % 2:
        raise ValueError(f"target dimension must be even and >= 2, got {n}")
    _check_mode(mode)
    if min_char is None:
        min_char = max(20, n + 1)
    if min_char < 20:
        raise ValueError(f"min_char must be at least 20 (generic regime), got {min_char}")

    facts = factorizations(n)
    types = default_scan_types(n)
    by_family: dict[str, int] = {}
    for t in types:
        by_family[t.family] = max(by_family.get(t.family, 0), t.rank)
    for fam, top in sorted(by_family.items()):
        root_data.prewarm_family(fam, top)

    if workers is None:
        workers = int(os.environ.get("ORTHOREPS_WORKERS", "1") or "1")

    def scan(t: LieType):
        return _scan_one_type(t, facts, n, mode, min_char, exceptions)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, types))
    else:
        results = [scan(t) for t in types]

    orthogonal: list[TensorCandidate] = []
    symplectic: list[TensorCandidate] = []
    non_self_dual = 0
    raw: dict[tuple[str, str, tuple[int, ...], str], list[tuple[int, int]]] = {}
    for t, (kept, events, nsd) in zip(types, results):
        non_self_dual += nsd
        for tc in kept:
            (orthogonal if tc.fs == 1 else symplectic).append(tc)
        for rule, fact, detail, count in events:
            raw.setdefault((rule, t.family, fact, detail), []).append((t.rank, count))

    for tc in orthogonal + symplectic:
        for f in tc.factors:
            if f.dim == 2 and f.type_id.family != "A":
                raise AssertionError(
                    f"classification produced a 2-dimensional factor of type {f.type_id}"
                )

    notes = tuple(
        ExclusionNote(
            rule=rule,
            family=family,
            ranks=_compress_ranks(sorted({r for r, _ in hits})),
            factorization=fact,
            detail=detail,
            count=sum(c for _, c in hits),
        )
        for (rule, family, fact, detail), hits in sorted(raw.items())
    )
    key = lambda tc: (tc.type_id, _product_sort_key(tc))
    return ClassificationReport(
        n=n,
        mode=mode,
        min_char=min_char,
        orthogonal=tuple(sorted(orthogonal, key=key)),
        symplectic=tuple(sorted(symplectic, key=key)),
        excluded_non_self_dual=non_self_dual,
        notes=notes,
    )


def verify_theorem1(pi: int) -> Theorem1Evidence:
    """Machine check of the classification at n = 4*pi for a prime 17 <= pi <= 73.

    Passes iff the orthogonal list is exactly the natural module of D at
    rank 2*pi; the evidence keeps the full report, including the symplectic
    side and every exclusion applied.
    """
    if not is_prime(pi) or not (17 <= pi <= 73):
        raise ValueError(
            f"pi={pi} is outside the classification hypothesis: pi must be a prime "
            "with 17 <= pi <= 73"
        )
    n = 4 * pi
    report = classify_orthogonal(n, min_char=n + 1, mode=MODE_ORBIT)
    d_type = LieType("D", 2 * pi)
    omega1 = (1,) + (0,) * (2 * pi - 1)
    passed = (
        len(report.orthogonal) == 1
        and report.orthogonal[0].type_id == d_type
        and len(report.orthogonal[0].factors) == 1
        and report.orthogonal[0].factors[0].weight == omega1
    )
    c_type = LieType("C", 2 * pi)
    c_omega1 = (1,) + (0,) * (2 * pi - 1)
    a1_weight = (n - 1,)
    has_c = any(
        tc.type_id == c_type and len(tc.factors) == 1 and tc.factors[0].weight == c_omega1
        for tc in report.symplectic
    )
    has_a1 = any(
        tc.type_id == LieType("A", 1) and len(tc.factors) == 1 and tc.factors[0].weight == a1_weight
        for tc in report.symplectic
    )
    return Theorem1Evidence(
        pi=pi,
        n=n,
        passed=passed,
        orthogonal=report.orthogonal,
        symplectic_has_c_natural=has_c,
        symplectic_has_a1_power=has_a1,
        report=report,
    )


def theorem1_sweep(pis: Iterable[int] | None = None) -> list[Theorem1Evidence]:
    """verify_theorem1 over several primes, largest first so caches warm once."""
    pis = sorted(set(THEOREM1_PRIMES if pis is None else pis))
    evidence = {pi: verify_theorem1(pi) for pi in reversed(pis)}
    return [evidence[pi] for pi in pis]


def tensor_json(tc: TensorCandidate) -> dict:
    obj = {
        "family": tc.type_id.family,
        "rank": tc.type_id.rank,
        "factors": [candidate_json(f) for f in tc.factors],
        "dim": str(tc.dim),
        "self_dual": tc.self_dual,
        "fs": tc.fs,
        "min_char": tc.min_char,
    }
    if tc.non_generic_ell is not None:
        obj["non_generic_ell"] = tc.non_generic_ell
    return obj


def report_json(report: ClassificationReport) -> dict:
    return {
        "n": report.n,
        "mode": report.mode,
        "min_char": report.min_char,
        "orthogonal": [tensor_json(tc) for tc in report.orthogonal],
        "symplectic": [tensor_json(tc) for tc in report.symplectic],
        "excluded_non_self_dual": report.excluded_non_self_dual,
        "exclusions": [
            {
                "rule": note.rule,
                "family": note.family,
                "ranks": note.ranks,
                "factorization": list(note.factorization),
                "detail": note.detail,
                "count": note.count,
            }
            for note in report.notes
        ],
    }


def evidence_json(ev: Theorem1Evidence) -> dict:
    return {
        "pi": ev.pi,
        "n": ev.n,
        "passed": ev.passed,
        "orthogonal": [tensor_json(tc) for tc in ev.orthogonal],
        "symplectic_has_c_natural": ev.symplectic_has_c_natural,
        "symplectic_has_a1_power": ev.symplectic_has_a1_power,
        "report": report_json(ev.report),
    }
