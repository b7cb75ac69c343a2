"""Pairwise comparison matrices: containers, validation, parsing, serialization.

An entry ``W[a, b] > 0`` records how strongly alternative ``a`` is preferred
over ``b``; the cross-diagonal entry of a queried pair holds (approximately)
the reciprocal value. A literal ``0.0`` marks a comparison that was never
made, so missingness must be symmetric. The diagonal is fixed at 1.

Entries are kept exactly as given. Published matrices are usually rounded,
so reciprocity is checked against a tolerance (default 0.05 on
``W[a,b]*W[b,a] - 1``); strict mode tightens that to 1e-12.
"""

from __future__ import annotations

import csv as _csv
import io
import json
import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import PcmValidationError

RECIPROCITY_TOL = 0.05
STRICT_RECIPROCITY_TOL = 1e-12


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Violation:
    """One broken matrix rule, pointing at the offending entry pair.

    ``a``/``b`` are row/column indices, or ``None`` for matrix-wide rules
    such as connectivity.
    """

    rule: str
    a: int | None
    b: int | None
    message: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


@dataclass(frozen=True, eq=False)
class Pcm:
    """Immutable pairwise comparison matrix with per-alternative labels."""

    entries: NDArray[np.float64]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def is_complete(self) -> bool:
        off = ~np.eye(self.n, dtype=bool)
        return bool(np.all(self.entries[off] > 0))

    def missing_pairs(self) -> list[tuple[int, int]]:
        """Unordered pairs (a < b) with no recorded comparison."""
        n = self.n
        return [(a, b) for a in range(n) for b in range(a + 1, n) if self.entries[a, b] == 0]

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def to_csv(self, *, header: bool = True) -> str:
        out = io.StringIO()
        writer = _csv.writer(out, lineterminator="\n")
        if header:
            writer.writerow(self.labels)
        for row in self.entries:
            writer.writerow([_fmt(v) for v in row])
        return out.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"labels": list(self.labels), "entries": [[float(v) for v in row] for row in self.entries]}
        )


def _fmt(v: float) -> str:
    # str() gives the shortest representation that round-trips exactly
    return str(float(v))


def make_pcm(
    entries,
    labels=None,
    *,
    check: bool = True,
    strict: bool = False,
) -> Pcm:
    """Build a :class:`Pcm` from array-like entries.

    With ``check=True`` (the default) every matrix invariant except
    connectivity is enforced and a :class:`PcmValidationError` carries the
    full violation list. ``check=False`` builds the container as-is, which
    is how deliberately broken matrices are fed to :func:`validate`.
    """
    arr = np.array(entries, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise PcmValidationError(
            [Violation("shape", None, None, f"expected a square table, got shape {arr.shape}")]
        )
    arr.setflags(write=False)
    if labels is None:
        labels = default_labels(arr.shape[0])
    labels = tuple(str(x) for x in labels)
    if len(labels) != arr.shape[0]:
        raise PcmValidationError(
            [Violation("labels", None, None, f"{len(labels)} labels for {arr.shape[0]} alternatives")]
        )
    pcm = Pcm(entries=arr, labels=labels)
    if check:
        violations = [v for v in validate(pcm, strict=strict) if v.rule != "disconnected"]
        if violations:
            raise PcmValidationError(violations)
    return pcm


def validate(pcm: Pcm, *, strict: bool = False) -> list[Violation]:
    """Check every matrix invariant plus connectivity; violations are data.

    Returns an empty list exactly when the matrix is a valid comparison
    matrix whose comparison graph is connected.
    """
    tol = STRICT_RECIPROCITY_TOL if strict else RECIPROCITY_TOL
    W = pcm.entries
    n = pcm.n
    out: list[Violation] = []
    if n < 2:
        out.append(Violation("size", None, None, f"need at least 2 alternatives, got {n}"))
        return out
    for a in range(n):
        for b in range(n):
            v = W[a, b]
            if not math.isfinite(v):
                out.append(Violation("finite", a, b, f"entry ({a},{b}) is not finite"))
            elif v < 0:
                out.append(Violation("negative", a, b, f"entry ({a},{b}) = {v} is negative"))
    if any(v.rule in ("finite", "negative") for v in out):
        return out
    for a in range(n):
        if W[a, a] != 1.0:
            out.append(Violation("diagonal", a, a, f"diagonal entry ({a},{a}) = {W[a, a]}, expected 1"))
    for a in range(n):
        for b in range(a + 1, n):
            fwd, rev = W[a, b], W[b, a]
            if (fwd > 0) != (rev > 0):
                out.append(
                    Violation(
                        "asymmetric-missingness",
                        a,
                        b,
                        f"entry ({a},{b}) = {fwd} but ({b},{a}) = {rev}: one side missing",
                    )
                )
            elif fwd > 0 and abs(fwd * rev - 1.0) > tol:
                out.append(
                    Violation(
                        "reciprocity",
                        a,
                        b,
                        f"W[{a},{b}]*W[{b},{a}] = {fwd * rev:.6g} is off unity by more than {tol}",
                    )
                )
    if not out:
        comps = connected_components(W > 0)
        if len(comps) > 1:
            parts = ", ".join("{" + ",".join(pcm.labels[i] for i in c) + "}" for c in comps)
            out.append(Violation("disconnected", None, None, f"comparison graph splits into {parts}"))
    return out


@dataclass(frozen=True, eq=False)
class AdjacencyGraph:
    """0/1 pattern of available comparisons; diagonal self-loops are 1."""

    adj: NDArray[np.int64]

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def edges(self) -> list[tuple[int, int]]:
        """Off-diagonal undirected edges as (a, b) with a < b."""
        n = self.n
        return [(a, b) for a in range(n) for b in range(a + 1, n) if self.adj[a, b]]

    def neighbors(self, a: int) -> list[int]:
        return [b for b in range(self.n) if b != a and self.adj[a, b]]


def adjacency_of(pcm: Pcm) -> AdjacencyGraph:
    """0/1 matrix marking which comparisons are present (diagonal included)."""
    adj = (pcm.entries > 0).astype(np.int64)
    adj.setflags(write=False)
    return AdjacencyGraph(adj=adj)


def connected_components(mask) -> list[list[int]]:
    """Connected components of the undirected graph on off-diagonal edges.

    ``mask`` is any square boolean/0-1 array; self-loops are ignored.
    """
    m = np.asarray(mask, dtype=bool)
    n = m.shape[0]
    seen = [False] * n
    comps: list[list[int]] = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in range(n):
                if v != u and not seen[v] and (m[u, v] or m[v, u]):
                    seen[v] = True
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(graph: AdjacencyGraph) -> bool:
    return len(connected_components(graph.adj)) == 1


def parse_pcm(text: str, fmt: str = "csv", *, strict: bool = False) -> Pcm:
    """Parse a comparison matrix from CSV or JSON text.

    CSV: ``n`` rows of ``n`` comma-separated decimals with an optional
    leading label row. JSON: ``{"labels": [...], "entries": [[...]]}`` where
    ``labels`` is optional and diagonal entries may be ``null`` (default 1).
    The literal value 0 denotes a missing comparison in both formats.
    """
    if fmt == "csv":
        entries, labels = _parse_csv(text)
    elif fmt == "json":
        entries, labels = _parse_json(text)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")
    return make_pcm(entries, labels, check=True, strict=strict)


def _syntax_error(message: str) -> PcmValidationError:
    return PcmValidationError([Violation("syntax", None, None, message)])


def _parse_csv(text: str):
    rows = [r for r in _csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise _syntax_error("empty CSV input")
    labels = None
    first = rows[0]
    if not all(_is_number(c) for c in first):
        labels = tuple(c.strip() for c in first)
        rows = rows[1:]
    data = []
    for r in rows:
        try:
            data.append([float(c) for c in r])
        except ValueError as exc:
            raise _syntax_error(f"non-numeric cell in row {r!r}") from exc
    widths = {len(r) for r in data}
    if len(widths) != 1 or widths.pop() != len(data):
        raise PcmValidationError(
            [Violation("shape", None, None, f"expected a square table, got {len(data)} rows")]
        )
    return data, labels


def _is_number(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


def _parse_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _syntax_error(f"malformed JSON: {exc}") from exc
    if isinstance(obj, dict):
        entries = obj.get("entries")
        labels = obj.get("labels")
    else:
        entries, labels = obj, None
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise _syntax_error("JSON must hold a list of rows under 'entries'")
    n = len(entries)
    data = []
    for a, row in enumerate(entries):
        if len(row) != n:
            raise PcmValidationError(
                [Violation("shape", None, None, f"row {a} has {len(row)} cells, expected {n}")]
            )
        parsed = []
        for b, cell in enumerate(row):
            if cell is None:
                if a != b:
                    raise _syntax_error(f"null entry at ({a},{b}); only diagonal cells may be omitted")
                parsed.append(1.0)
            else:
                try:
                    parsed.append(float(cell))
                except (TypeError, ValueError) as exc:
                    raise _syntax_error(f"non-numeric cell at ({a},{b})") from exc
        data.append(parsed)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
    return data, labels
