import numpy as np
import pytest

from pcmentropy import make_pcm
from pcmentropy.datasets import tennis as _tennis

# Table printed to 2 decimals; the filled pairs are exact reciprocals of the
# upper entries, the known entries are as published.
TENNIS_FILLED_PRINTED = np.array(
    [
        [1.00, 1.39, 0.83, 0.76, 0.90, 0.73],
        [0.72, 1.00, 0.74, 0.87, 0.50, 0.77],
        [1.21, 1.36, 1.00, 0.95, 0.77, 0.95],
        [1.32, 1.15, 1.05, 1.00, 0.52, 1.05],
        [1.11, 2.02, 1.29, 1.91, 1.00, 1.42],
        [1.36, 1.30, 1.05, 0.95, 0.71, 1.00],
    ]
)

TENNIS_NU = np.array([0.211, 0.120, 0.120, 0.211, 0.170, 0.170])
TENNIS_G = np.array([0.188, 0.083, 0.116, 0.208, 0.233, 0.173])
TENNIS_F = np.array([0.150, 0.117, 0.164, 0.166, 0.231, 0.172])
TENNIS_FH = np.array([0.150, 0.122, 0.166, 0.161, 0.232, 0.170])


@pytest.fixture(scope="session")
def tennis():
    return _tennis()


@pytest.fixture()
def worked_3x3():
    return make_pcm([[1, 2, 8], [0.5, 1, 2], [0.125, 0.5, 1]])


def consistent_pcm(scale, mask=None):
    """Exact-ratio matrix from a positive scale, optionally masked."""
    f = np.asarray(scale, dtype=float)
    n = f.size
    W = np.zeros((n, n))
    for a in range(n):
        for b in range(n):
            if mask is None or mask[a][b] or a == b:
                W[a, b] = f[a] / f[b]
    return make_pcm(W, check=False)


def chain_pcm(scale):
    """Consistent chain: only comparisons (i, i+1) are known."""
    n = len(scale)
    mask = np.eye(n, dtype=bool)
    for i in range(n - 1):
        mask[i, i + 1] = mask[i + 1, i] = True
    return consistent_pcm(scale, mask)


def eig_pair(W):
    """Independent dense-eigensolver oracle for the dominant pair."""
    vals, vecs = np.linalg.eig(W)
    i = int(np.argmax(vals.real))
    nu = np.abs(vecs[:, i].real)
    nu = nu / nu.sum()
    valsl, vecsl = np.linalg.eig(W.T)
    jj = int(np.argmax(valsl.real))
    mu = np.abs(vecsl[:, jj].real)
    mu = mu / (mu @ nu)
    return float(vals.real[i]), nu, mu


def oracle_sdot(pcm, gamma=1.0):
    """Entropy production via the closed middle form and numpy.linalg.eig."""
    E = pcm.entries
    Wg = np.zeros_like(E)
    pos = E > 0
    Wg[pos] = E[pos] ** gamma
    eta, nu, mu = eig_pair(Wg)
    J = np.zeros_like(E)
    J[pos] = 0.5 * (np.log(E[pos]) - np.log(E.T[pos]))
    return 2.0 * gamma * float(mu @ ((Wg * J) @ nu)) / eta
