"""Classical consistency indices and the aggregate inconsistency report."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .completion import incomplete_preference_scale
from .errors import IncompleteMatrixError
from .merw import decompose, induce
from .pcm import Pcm
from .spectral import perron


def saaty_ci(pcm: Pcm) -> float:
    """Eigenvalue consistency index (eta - n) / (n - 1).

    Defined only for complete matrices: the dominant eigenvalue of a
    complete reciprocal matrix is at least n, with equality exactly on
    consistent ones.
    """
    if not pcm.is_complete:
        raise IncompleteMatrixError("consistency index needs a complete matrix")
    eta = perron(pcm.entries).eta
    return (eta - pcm.n) / (pcm.n - 1)


def hci(pcm: Pcm) -> float:
    """Harmonic consistency index from the matrix column sums.

    With column totals ``t_a = sum_b W[b, a]`` the reciprocals sum to 1
    exactly on consistent matrices, so the harmonic mean ``HM = n / sum(1/t)``
    deviates from n as inconsistency grows:
    ``HCI = (HM - n)(n + 1) / (n(n - 1))``.
    """
    if not pcm.is_complete:
        raise IncompleteMatrixError("harmonic consistency index needs a complete matrix")
    n = pcm.n
    t = pcm.entries.sum(axis=0)
    hm = n / float(np.sum(1.0 / t))
    return (hm - n) * (n + 1) / (n * (n - 1))


@dataclass(frozen=True, eq=False)
class InconsistencyReport:
    """Everything a caller needs to judge and repair one matrix.

    ``ci``/``hci`` are None on incomplete matrices: the entropy-production
    index and the corrected scale are the only quantities that need no
    fill-in there.
    """

    sdot: float
    ci: float | None
    hci: float | None
    per_comparison: tuple[tuple[int, int, float], ...]
    per_alternative: NDArray[np.float64]
    scale: NDArray[np.float64]
    complete: bool
    gamma: float

    def to_dict(self) -> dict:
        return {
            "sdot": self.sdot,
            "ci": self.ci,
            "hci": self.hci,
            "scale": [float(v) for v in self.scale],
            "perComparison": [
                {"a": a, "b": b, "value": value} for a, b, value in self.per_comparison
            ],
            "perAlternative": [float(v) for v in self.per_alternative],
            "complete": self.complete,
            "gamma": self.gamma,
        }


def report(pcm: Pcm, gamma: float = 1.0) -> InconsistencyReport:
    """Full inconsistency report for a connected comparison matrix."""
    model = induce(pcm, gamma)
    per_comparison = tuple(decompose(model, "comparison"))
    per_alternative = decompose(model, "alternative")
    scale = incomplete_preference_scale(pcm)
    complete = pcm.is_complete
    return InconsistencyReport(
        sdot=model.sdot,
        ci=saaty_ci(pcm) if complete else None,
        hci=hci(pcm) if complete else None,
        per_comparison=per_comparison,
        per_alternative=per_alternative,
        scale=scale,
        complete=complete,
        gamma=float(gamma),
    )
