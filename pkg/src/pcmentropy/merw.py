"""Maximum-path-entropy random walks induced by a comparison matrix.

For a matrix ``W`` and a parameter ``gamma``, the walk with maximal path
entropy under a mean log-preference ("flux") constraint has transition
probabilities

    k[a, b] = nu[b] * W[a, b]**gamma / (eta * nu[a])

where ``(eta, nu)`` is the dominant eigenpair of the element-wise power
``W**gamma``. Its stationary distribution is ``p = nu * mu`` with ``mu`` the
left eigenvector. The walk's entropy-production rate

    sdot = sum_ab p[a] k[a, b] log(k[a, b] / k[b, a]) = 2 * gamma * flux

vanishes exactly when the matrix is consistent (every entry a ratio of one
positive scale), which is what makes it an inconsistency index: it needs no
fill-in of missing comparisons, only a connected comparison graph.

The per-edge flux is taken as the antisymmetric part
``j[a, b] = (log W[a, b] - log W[b, a]) / 2``, which equals ``log W[a, b]``
whenever cross-diagonal entries are exact reciprocals. Rounded published
matrices are only approximately reciprocal; the antisymmetric form keeps
``j[a, b] + j[b, a] = 0`` and the identity ``sdot = 2*gamma*flux`` exact for
them as well. The flux always uses the *original* entries, never the powered
ones: gamma rescales the walk, not the observable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np
from numpy.typing import NDArray

from .errors import MissingEdgeError, PcmError
from .pcm import Pcm
from .spectral import elementwise_pow, perron

IDENTITY_TOL = 1e-10


@dataclass(frozen=True)
class EdgeContribution:
    """Directed per-edge share of the entropy-production rate."""

    a: int
    b: int
    sigma: float
    jflux: float


@dataclass(frozen=True, eq=False)
class MerwModel:
    """One member of the gamma family of walks induced by a matrix."""

    gamma: float
    k: NDArray[np.float64]
    p: NDArray[np.float64]
    eta: float
    nu: NDArray[np.float64]
    mu: NDArray[np.float64]
    flux: float
    sdot: float
    j: NDArray[np.float64]

    @property
    def n(self) -> int:
        return self.k.shape[0]

    def edge_contributions(self) -> list[EdgeContribution]:
        """Every ordered off-diagonal edge with its sigma and flux terms."""
        sig = _sigma_matrix(self)
        n = self.n
        return [
            EdgeContribution(a, b, float(sig[a, b]), float(self.j[a, b]))
            for a in range(n)
            for b in range(n)
            if a != b and self.k[a, b] > 0
        ]


class FluxPoint(NamedTuple):
    gamma: float
    flux: float
    sdot: float
    eta: float


def flux_matrix(pcm: Pcm) -> NDArray[np.float64]:
    """Antisymmetric per-edge flux, zero where no comparison exists."""
    E = pcm.entries
    pos = E > 0
    j = np.zeros_like(E)
    j[pos] = 0.5 * (np.log(E[pos]) - np.log(E.T[pos]))
    j.setflags(write=False)
    return j


def induce(pcm: Pcm, gamma: float = 1.0) -> MerwModel:
    """Build the induced walk at ``gamma`` for a connected comparison matrix."""
    if not np.isfinite(gamma):
        raise ValueError("gamma must be finite")
    Wg = elementwise_pow(pcm, gamma)
    pair = perron(Wg)
    nu, mu, eta = pair.nu, pair.mu, pair.eta
    k = Wg * nu[None, :] / (eta * nu[:, None])
    p = nu * mu
    j = flux_matrix(pcm)
    flux = float(np.sum(p[:, None] * k * j))
    sdot = 2.0 * gamma * flux
    if -IDENTITY_TOL < sdot < 0.0:
        sdot = 0.0  # consistent inputs land at exactly zero up to rounding
    k.setflags(write=False)
    p.setflags(write=False)
    return MerwModel(gamma=float(gamma), k=k, p=p, eta=eta, nu=nu, mu=mu, flux=flux, sdot=sdot, j=j)


def _sigma_matrix(model: MerwModel) -> NDArray[np.float64]:
    """sigma[a, b] = p[a] k[a, b] log(k[a, b]/k[b, a]); zero off the pattern.

    Diagonal terms vanish identically (log of 1), matching the convention
    that self-loops never carry flux or entropy production.
    """
    k = model.k
    n = model.n
    mask = (k > 0) & ~np.eye(n, dtype=bool)
    sig = np.zeros_like(k)
    kf = k[mask]
    kr = k.T[mask]
    pa = np.broadcast_to(model.p[:, None], k.shape)[mask]
    sig[mask] = pa * kf * np.log(kf / kr)
    return sig


def entropy_production(pcm: Pcm, gamma: float = 1.0) -> float:
    """Entropy-production rate, cross-checked through both defining forms.

    Evaluates the direct sum ``sum p_a k_ab log(k_ab/k_ba)`` and the closed
    form ``2*gamma*flux``; they must agree within 1e-10 or the spectral
    solution is unsound.
    """
    model = induce(pcm, gamma)
    direct = float(_sigma_matrix(model).sum())
    if abs(direct - model.sdot) > IDENTITY_TOL:
        raise PcmError(
            f"entropy production forms disagree: {direct!r} vs {model.sdot!r}; "
            "spectral solution too loose"
        )
    return model.sdot


def decompose(
    model: MerwModel, by: Literal["comparison", "alternative"] = "comparison"
):
    """Split the entropy-production rate over comparisons or alternatives.

    ``by="comparison"`` returns one ``(a, b, value)`` triple per unordered
    edge (a < b), each value the sum of the two directed sigma terms.
    ``by="alternative"`` returns an array of per-source row sums. Both
    decompositions sum to ``model.sdot``.
    """
    sig = _sigma_matrix(model)
    if by == "comparison":
        n = model.n
        return [
            (a, b, float(sig[a, b] + sig[b, a]))
            for a in range(n)
            for b in range(a + 1, n)
            if model.k[a, b] > 0
        ]
    if by == "alternative":
        return sig.sum(axis=1)
    raise ValueError(f"unknown decomposition {by!r}; expected 'comparison' or 'alternative'")


def path_log_ratio(model: MerwModel, path) -> float:
    """log-probability gap between a path and its time reversal.

    Computed directly from the transition probabilities: the log of the
    product of ``k`` along the forward path minus the log of the product
    along the reversed path. Raises :class:`MissingEdgeError` if consecutive
    vertices share no comparison.
    """
    seq = [int(v) for v in path]
    if not seq:
        raise ValueError("path must contain at least one vertex")
    n = model.n
    for v in seq:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for {n} alternatives")
    total = 0.0
    for a, b in zip(seq, seq[1:]):
        if a != b and model.k[a, b] <= 0:
            raise MissingEdgeError(f"no comparison between {a} and {b}")
        if a != b:
            total += float(np.log(model.k[a, b]) - np.log(model.k[b, a]))
    return total


def flux_curve(pcm: Pcm, gammas) -> list[FluxPoint]:
    """Evaluate (gamma, flux, sdot, eta) across a gamma grid."""
    out = []
    for g in gammas:
        model = induce(pcm, float(g))
        out.append(FluxPoint(gamma=model.gamma, flux=model.flux, sdot=model.sdot, eta=model.eta))
    return out
