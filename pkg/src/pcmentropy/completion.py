"""Filling incomplete matrices by path averaging, and the corrected scale.

A missing comparison (a, b) can be approximated along any simple path of
known comparisons from a to b by summing log-entries as if a single
preference scale generated them. The fill-in is the geometric mean of those
path products, which automatically gives exactly reciprocal new entries.

Alternatively, the preference scale of an incomplete matrix can be read off
without any fill-in: the dominant right eigenvector ``g`` of the raw matrix
absorbs a factor from the comparison graph's own eigenvector ``nu_A``, so the
corrected scale is ``f = g / nu_A`` (renormalized). On complete matrices the
graph factor is uniform and ``f`` reduces to the classical eigenvector scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import DisconnectedError, PathBudgetError
from .pcm import AdjacencyGraph, Pcm, adjacency_of, connected_components, make_pcm
from .spectral import perron

PATH_BUDGET = 100_000


@dataclass(frozen=True)
class PathSet:
    """All simple paths between two alternatives over known comparisons."""

    source: int
    target: int
    paths: tuple[tuple[int, ...], ...]


def enumerate_paths(
    graph: AdjacencyGraph, source: int, target: int, *, budget: int = PATH_BUDGET
) -> PathSet:
    """Every simple path from source to target, in lexicographic order.

    Self-loops are ignored; the direct edge, when present, is the length-1
    path. Raises :class:`PathBudgetError` past ``budget`` paths, since simple
    path counts grow factorially with graph size.
    """
    n = graph.n
    if not (0 <= source < n and 0 <= target < n):
        raise ValueError(f"vertices must lie in [0, {n})")
    if source == target:
        raise ValueError("source and target must differ")
    neighbors = [graph.neighbors(v) for v in range(n)]  # ascending by construction
    paths: list[tuple[int, ...]] = []
    on_path = [False] * n
    stack = [source]
    on_path[source] = True

    def visit(u: int) -> None:
        for v in neighbors[u]:
            if v == target:
                if len(paths) >= budget:
                    raise PathBudgetError(source, target, budget)
                paths.append(tuple(stack) + (v,))
            elif not on_path[v]:
                on_path[v] = True
                stack.append(v)
                visit(v)
                stack.pop()
                on_path[v] = False

    visit(source)
    return PathSet(source=source, target=target, paths=tuple(paths))


def harker_fill(pcm: Pcm, *, budget: int = PATH_BUDGET) -> Pcm:
    """Complete a matrix by geometric path averaging over known entries.

    Each missing (a, b) with a < b becomes ``exp(mean_paths(sum of log W
    along the path))`` over all simple a-to-b paths of *originally known*
    comparisons; (b, a) is set to the exact reciprocal. Known entries are
    never touched, and fills never cascade into one another. A complete
    input is returned unchanged.

    Per-edge logs are taken as the antisymmetric part
    ``(log W[u, v] - log W[v, u]) / 2``, identical to ``log W[u, v]`` on
    exactly reciprocal input; on rounded published tables it averages the
    two orientations of every path, so the fill does not depend on which
    direction was enumerated.
    """
    graph = adjacency_of(pcm)
    comps = connected_components(graph.adj)
    if len(comps) > 1:
        raise DisconnectedError(comps)
    missing = pcm.missing_pairs()
    if not missing:
        return pcm
    E = pcm.entries
    logE = np.zeros_like(E)
    pos = E > 0
    logE[pos] = 0.5 * (np.log(E[pos]) - np.log(E.T[pos]))
    filled = E.copy()
    for a, b in missing:
        pset = enumerate_paths(graph, a, b, budget=budget)
        sums = [sum(logE[u, v] for u, v in zip(p, p[1:])) for p in pset.paths]
        value = float(np.exp(np.mean(sums)))
        filled[a, b] = value
        filled[b, a] = 1.0 / value
    return make_pcm(filled, pcm.labels, check=True)


def incomplete_preference_scale(pcm: Pcm) -> NDArray[np.float64]:
    """Preference scale of a (possibly incomplete) matrix, L1-normalized.

    Divides the dominant eigenvector of the matrix by the dominant
    eigenvector of its comparison graph, correcting for uneven connectivity.
    Exact on incomplete-but-consistent inputs; on complete matrices it
    coincides with the classical right-eigenvector scale.
    """
    g = perron(pcm.entries).nu
    nu_a = perron(adjacency_of(pcm).adj.astype(float)).nu
    f = g / nu_a
    f = f / f.sum()
    f.setflags(write=False)
    return f
