"""Enumeration of restricted highest-weight modules below a dimension bound.

The search walks the dominant-weight lattice depth-first, incrementing one
coordinate at a time; strict monotonicity of the Weyl dimension in every
coordinate makes pruning at the bound exhaustive.  Coordinates whose
fundamental weight already exceeds the bound can never appear in a hit, so
the walk is confined to the "active" coordinates, which keeps scans over
large-rank types cheap.  Generic (characteristic-zero) dimensions are
reported; known small-characteristic corrections are ingested from a CSV
exceptions file rather than computed.
"""

from __future__ import annotations

import io
import json
import math
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from . import root_data
from .root_data import LieType, build_root_datum
from .weights import as_weight, dim_from_pairings, weyl_dimension

__all__ = [
    "IrrepCandidate",
    "ExceptionRecord",
    "enumerate_restricted",
    "candidates_of_dimension",
    "default_scan_types",
    "load_exceptions",
    "candidate_json",
    "write_candidates_jsonl",
]

# Dimensions are generic for characteristics above this floor; see the
# exceptions file for the ingested non-generic corrections.
GENERIC_CHAR_FLOOR = 20

_LOG_SLACK = 1e-6


@dataclass(frozen=True)
class IrrepCandidate:
    """One restricted highest-weight module with its classification flags."""

    type_id: LieType
    weight: tuple[int, ...]
    dim: int
    self_dual: bool
    fs: int  # +1 orthogonal, -1 symplectic, 0 not self-dual
    epsilon: int
    min_char: int


@dataclass(frozen=True)
class ExceptionRecord:
    """An ingested non-generic dimension: at characteristic ell the module
    with this highest weight has corrected_dim instead of the generic value."""

    type_id: LieType
    weight: tuple[int, ...]
    ell: int
    corrected_dim: int


@dataclass(frozen=True)
class _ScanData:
    two_rho: tuple[int, ...]
    fund_log: np.ndarray  # log of the fundamental-weight dimensions
    epsilon: int
    perm: tuple[int, ...]


_scan_cache: dict[LieType, _ScanData] = {}
_scan_lock = threading.Lock()


def _type_rows(type_id: LieType):
    """Family-table rows/columns realizing this type, in canonical order."""
    tab = root_data._family_table(type_id.family, type_id.rank)
    lo, hi = root_data._window(type_id.family, type_id.rank, tab.top)
    rows = np.nonzero(root_data._window_rows(tab, lo, hi))[0]
    return tab, rows, lo, hi


def _scan_data(type_id: LieType) -> _ScanData:
    with _scan_lock:
        cached = _scan_cache.get(type_id)
    if cached is not None:
        return cached
    tab, rows, lo, hi = _type_rows(type_id)
    sub = tab.matrix[rows]
    heights = tab.heights[rows].astype(np.float64)
    m = type_id.rank
    fund_log = np.empty(m, dtype=np.float64)
    for j in range(m):
        col = sub[:, lo + j]
        nz = np.nonzero(col)[0]
        fund_log[j] = float(np.log1p(col[nz] / heights[nz]).sum())
    two_rho = tuple(int(v) for v in sub[:, lo:hi].sum(axis=0, dtype=np.int64))
    data = _ScanData(
        two_rho=two_rho,
        fund_log=fund_log,
        epsilon=root_data._epsilon(type_id),
        perm=root_data.diagram_automorphism(type_id),
    )
    with _scan_lock:
        _scan_cache[type_id] = data
    return data


def _search_weights(type_id: LieType, bound: int) -> list[tuple[tuple[int, ...], int]]:
    """All dominant weights with dimension <= bound, with exact dimensions."""
    sd = _scan_data(type_id)
    m = type_id.rank
    log_bound = math.log(bound)
    maybe = np.nonzero(sd.fund_log <= log_bound + _LOG_SLACK)[0]
    zero = (0,) * m
    if maybe.size == 0:
        return [(zero, 1)]

    tab, rows, lo, hi = _type_rows(type_id)
    cols = maybe + lo
    meet = rows[np.nonzero((tab.matrix[np.ix_(rows, cols)] != 0).any(axis=1))[0]]
    sub = tab.matrix[np.ix_(meet, cols)].astype(np.int64)  # R x a
    heights = tab.heights[meet]

    def exact_dim(pair: np.ndarray) -> int:
        return dim_from_pairings(heights, pair)

    # Confirm the float prescreen exactly at the boundary.
    active: list[int] = []
    for k in range(maybe.size):
        if exact_dim(sub[:, k]) <= bound:
            active.append(k)
    if not active:
        return [(zero, 1)]
    sub = sub[:, active]
    act_cols = [int(maybe[k]) for k in active]

    found: list[tuple[tuple[int, ...], int]] = [(zero, 1)]
    zero_pair = np.zeros(sub.shape[0], dtype=np.int64)
    stack: list[tuple[tuple[int, ...], np.ndarray, int]] = [((0,) * len(active), zero_pair, 0)]
    while stack:
        wloc, pair, start = stack.pop()
        for j in range(start, len(active)):
            child_pair = pair + sub[:, j]
            dim = exact_dim(child_pair)
            if dim > bound:
                continue
            child = list(wloc)
            child[j] += 1
            full = [0] * m
            for k, c in zip(act_cols, child):
                full[k] = c
            found.append((tuple(full), dim))
            if dim < bound:
                stack.append((tuple(child), child_pair, j))
    return found


def _min_char(weight: tuple[int, ...], matching_ells: Iterable[int] = ()) -> int:
    floor = max(GENERIC_CHAR_FLOOR, 1 + max(weight, default=0))
    for ell in matching_ells:
        if ell >= GENERIC_CHAR_FLOOR:
            floor = max(floor, ell + 1)
    return floor


def enumerate_restricted(
    type_id: LieType,
    dim_bound: int,
    exceptions: Sequence[ExceptionRecord] = (),
) -> list[IrrepCandidate]:
    """All restricted modules of one type with generic dimension <= dim_bound.

    Output is duplicate-free and sorted by (dimension, weight); the trivial
    module is included.  Exceptions matching a weight raise its min_char so
    callers know where the generic dimension stops being trustworthy.
    """
    if dim_bound < 1:
        raise ValueError(f"dimension bound must be >= 1, got {dim_bound}")
    sd = _scan_data(type_id)
    exc_by_weight: dict[tuple[int, ...], list[int]] = {}
    for rec in exceptions:
        if rec.type_id == type_id and rec.corrected_dim < _generic_dim(rec):
            exc_by_weight.setdefault(rec.weight, []).append(rec.ell)

    out = []
    for weight, dim in _search_weights(type_id, dim_bound):
        sdual = tuple(weight[sd.perm[i]] for i in range(type_id.rank)) == weight
        fs = 0
        if sdual:
            parity = sum(c * a for c, a in zip(sd.two_rho, weight)) % 2
            fs = -1 if parity else 1
        out.append(
            IrrepCandidate(
                type_id=type_id,
                weight=weight,
                dim=dim,
                self_dual=sdual,
                fs=fs,
                epsilon=sd.epsilon,
                min_char=_min_char(weight, exc_by_weight.get(weight, ())),
            )
        )
    out.sort(key=lambda c: (c.dim, c.weight))
    return out


def default_scan_types(n: int, include_a1: bool = True) -> list[LieType]:
    """Types whose smallest faithful module can still fit in dimension n.

    Classical ranks are cut off at the natural-module dimension; the
    exceptional types are always scanned.  C2 is omitted in favor of the
    isomorphic B2 so coincident rank-2 candidates are not double-listed.
    """
    types = [LieType("A", m) for m in range(1 if include_a1 else 2, n)]
    types += [LieType("B", m) for m in range(2, n // 2 + 1)]
    types += [LieType("C", m) for m in range(3, n // 2 + 1)]
    types += [LieType("D", m) for m in range(4, n // 2 + 1)]
    types += [LieType("E", m) for m in (6, 7, 8)]
    types += [LieType("F", 4), LieType("G", 2)]
    return sorted(types)


def candidates_of_dimension(
    types: Iterable[LieType],
    n: int,
    self_dual_only: bool = False,
    exceptions: Sequence[ExceptionRecord] = (),
) -> list[IrrepCandidate]:
    """Nontrivial restricted modules of exactly dimension n among the given types."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    out: list[IrrepCandidate] = []
    for t in sorted(set(types)):
        for cand in enumerate_restricted(t, n, exceptions):
            if cand.dim != n or not any(cand.weight):
                continue
            if self_dual_only and not cand.self_dual:
                continue
            out.append(cand)
    out.sort(key=lambda c: (c.type_id, c.weight))
    return out


def _generic_dim(rec: ExceptionRecord) -> int:
    return weyl_dimension(build_root_datum(rec.type_id), rec.weight)


def _split_csv_row(line: str) -> list[str]:
    """Split on top-level commas; bracketed weight vectors may be unquoted."""
    parts, depth, cur = [], 0, []
    for ch in line:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p.strip().strip('"').strip() for p in parts]


_EXCEPTIONS_HEADER = ["family", "rank", "weight", "ell", "dim"]


def load_exceptions(source: str | Path | IO[str] | Iterable[str]) -> tuple[ExceptionRecord, ...]:
    """Parse and validate a CSV stream of non-generic dimension records.

    Format: header ``family,rank,weight,ell,dim`` with the weight as a
    bracketed coefficient list, e.g. ``B,2,"[2,2]",7,71``.  Rows must have a
    prime ell and a corrected dimension no larger than the generic one;
    duplicate (type, weight, ell) rows are rejected.  Errors name the
    offending line number.
    """
    from .arith import is_prime

    if isinstance(source, (str, Path)):
        lines = Path(source).read_text().splitlines()
    elif isinstance(source, io.TextIOBase):
        lines = source.read().splitlines()
    else:
        lines = [str(s).rstrip("\n") for s in source]

    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        return ()
    first_no, header = rows[0]
    if _split_csv_row(header) != _EXCEPTIONS_HEADER:
        raise ValueError(
            f"line {first_no}: bad header {header!r}; expected "
            f"{','.join(_EXCEPTIONS_HEADER)}"
        )

    records: list[ExceptionRecord] = []
    seen: dict[tuple, int] = {}
    for no, line in rows[1:]:
        fields = _split_csv_row(line)
        if len(fields) != 5:
            raise ValueError(f"line {no}: expected 5 fields, got {len(fields)}")
        fam, rank_s, weight_s, ell_s, dim_s = fields
        try:
            type_id = LieType(fam, int(rank_s))
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}") from None
        body = weight_s.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"line {no}: weight must be a bracketed list, got {weight_s!r}")
        try:
            weight = as_weight(
                [int(v) for v in body[1:-1].split(",") if v.strip() != ""],
                type_id.rank,
            )
            ell = int(ell_s)
            corrected = int(dim_s)
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}") from None
        if not is_prime(ell):
            raise ValueError(f"line {no}: ell={ell} is not prime")
        if corrected < 1:
            raise ValueError(f"line {no}: corrected dimension must be positive")
        generic = weyl_dimension(build_root_datum(type_id), weight)
        if corrected > generic:
            raise ValueError(
                f"line {no}: corrected dimension {corrected} exceeds the generic "
                f"dimension {generic} of {type_id} weight {list(weight)}"
            )
        key = (type_id, weight, ell)
        if key in seen:
            raise ValueError(f"line {no}: duplicate record (first seen on line {seen[key]})")
        seen[key] = no
        records.append(ExceptionRecord(type_id, weight, ell, corrected))
    return tuple(records)


def candidate_json(cand: IrrepCandidate) -> dict:
    """JSON object for one candidate; dimensions as decimal strings."""
    return {
        "family": cand.type_id.family,
        "rank": cand.type_id.rank,
        "weight": list(cand.weight),
        "dim": str(cand.dim),
        "self_dual": cand.self_dual,
        "fs": cand.fs,
        "epsilon": cand.epsilon,
        "min_char": cand.min_char,
    }


def write_candidates_jsonl(cands: Iterable[IrrepCandidate], fp: IO[str]) -> None:
    """Emit one candidate per line as JSON."""
    for cand in cands:
        fp.write(json.dumps(candidate_json(cand)) + "\n")
