"""Complex configurations through their doubled real picture.

For ``w = x + iy`` in C^n the associated real vectors are ``u = [x, y]`` and
``v = [-y, x]`` in R^{2n}. For n+1 vectors with strictly positive convex
coefficients summing them to zero ("Property A"), every 2n x 2n determinant
mixing n of the u's with n of the v's factors into a product of two complex
n x n determinants, and the hull of the 2n+2 real vectors decomposes into
(n+1)^2 simplices with apex at the origin.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.special import logsumexp

from .core import Configuration, Field, abs_det_batch, from_array, random_config
from .errors import BadIndices, NoPropertyA, WrongArity, WrongField
from .simplex import regular_simplex_vertices

DEGENERATE_TOL = 1e-12
NULL_TOL = 1e-8
WITNESS_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DoubledConfiguration:
    source: Configuration
    u: np.ndarray  # (n+1, 2n)
    v: np.ndarray  # (n+1, 2n)

    @property
    def n(self) -> int:
        return self.source.n


@dataclass(frozen=True, eq=False)
class PropertyAWitness:
    r: np.ndarray

    def residual(self, config: Configuration) -> float:
        return float(np.linalg.norm(self.r @ config.vectors))

    def is_valid(self, config: Configuration) -> bool:
        return (
            bool(np.all(self.r > 0))
            and abs(math.fsum(self.r) - 1.0) <= 1e-12
            and self.residual(config) <= WITNESS_RESIDUAL_TOL
        )


@dataclass(frozen=True, eq=False)
class Degenerate:
    """Some convex coefficient vanished, so the configuration has a zero determinant."""

    r: np.ndarray


@dataclass(frozen=True)
class MixedDetIndex:
    J: tuple
    K: tuple

    def __post_init__(self):
        for name, idx in (("J", self.J), ("K", self.K)):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise BadIndices(f"{name}={idx} is not strictly ascending")


def _require_simplex_shape(config: Configuration, complex_only: bool = True):
    if complex_only and config.field is not Field.COMPLEX:
        raise WrongField("expected a complex configuration")
    if config.count != config.n + 1:
        raise WrongArity(f"expected n+1={config.n + 1} vectors, got {config.count}")


def associate(config: Configuration) -> DoubledConfiguration:
    _require_simplex_shape(config)
    x, y = config.vectors.real, config.vectors.imag
    u = np.concatenate([x, y], axis=1)
    v = np.concatenate([-y, x], axis=1)
    dots = np.einsum("ij,ij->i", u, v)
    assert np.all(np.abs(dots) <= 1e-14), dots
    u.setflags(write=False)
    v.setflags(write=False)
    return DoubledConfiguration(config, u, v)


def realify(z) -> np.ndarray:
    """The 2n x 2n real block matrix [[X, -Y], [Y, X]] of a complex n x n matrix."""
    z = np.asarray(z, dtype=np.complex128)
    x, y = z.real, z.imag
    return np.block([[x, -y], [y, x]])


def block_det_identity(z) -> tuple:
    """Return (|det Z|^2, det [[X, -Y], [Y, X]]).

    The left side uses pivoted elimination on Z; the right side is a signed
    LAPACK determinant of the real block matrix, so the two are independent.
    """
    z = np.atleast_2d(np.asarray(z, dtype=np.complex128))
    lhs = float(abs_det_batch(z[None])[0] ** 2)
    sign, logdet = np.linalg.slogdet(realify(z))
    return lhs, float(sign * np.exp(logdet))


def _null_dim(a: np.ndarray, s: np.ndarray) -> int:
    rank = int(np.sum(s > NULL_TOL))
    return a.shape[1] - rank


def _positive_lp(a_real: np.ndarray):
    """Maximise min r_j subject to a_real @ r = 0, sum r = 1, r >= 0."""
    m = a_real.shape[1]
    c = np.zeros(m + 1)
    c[-1] = -1.0
    a_eq = np.zeros((a_real.shape[0] + 1, m + 1))
    a_eq[:-1, :m] = a_real
    a_eq[-1, :m] = 1.0
    b_eq = np.zeros(a_real.shape[0] + 1)
    b_eq[-1] = 1.0
    a_ub = np.hstack([-np.eye(m), np.ones((m, 1))])
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(m), A_eq=a_eq, b_eq=b_eq,
                  bounds=[(0, None)] * m + [(None, 1)], method="highs")
    if res.status != 0 or res.x[-1] <= DEGENERATE_TOL:
        return None
    r = np.clip(res.x[:m], 0.0, None)
    return r / math.fsum(r)


def _stacked_real(config: Configuration) -> np.ndarray:
    m = config.vectors.T
    if config.field is Field.REAL:
        return m
    return np.vstack([m.real, m.imag])


def check_property_a(config: Configuration) -> PropertyAWitness | None:
    """Strictly positive r with sum 1 and sum r_j w_j = 0, or None."""
    _require_simplex_shape(config, complex_only=False)
    a = _stacked_real(config)
    _, s, vh = np.linalg.svd(a)
    s_full = np.zeros(a.shape[1])
    s_full[: len(s)] = s
    dim = _null_dim(a, s_full)
    if dim == 0:
        return None
    if dim == 1:
        g = vh[-1]
        g = g if g.sum() > 0 else -g
        r = g / math.fsum(g)
        if np.any(r <= DEGENERATE_TOL):
            return None
    else:
        r = _positive_lp(a)
        if r is None:
            return None
    w = PropertyAWitness(r)
    return w if w.is_valid(config) else None


def normalize_property_a(config: Configuration):
    """Rotate each vector by a phase so the set acquires Property A.

    Returns ``(config_tilde, witness)`` where ``witness`` is a
    PropertyAWitness, or a Degenerate marker when some coefficient is
    <= 1e-12. Every |det| is unchanged. Distinctness of the rotated vectors
    is not re-checked.
    """
    _require_simplex_shape(config)
    m = config.vectors.T
    _, s, vh = np.linalg.svd(m)
    gamma = None
    if s.min() < NULL_TOL:
        # null space of dimension > 1: prefer a real positive combination
        r = _positive_lp(_stacked_real(config))
        if r is not None:
            gamma = r.astype(np.complex128)
    if gamma is None:
        gamma = vh[-1].conj()
    mags = np.abs(gamma)
    pivot = int(np.flatnonzero(mags >= 0.5 * mags.max())[0])
    gamma = gamma * (np.conj(gamma[pivot]) / mags[pivot])
    mags = np.abs(gamma)
    r = mags / math.fsum(mags)
    theta = np.where(mags == 0.0, 0.0, np.angle(gamma))
    tilde = from_array(Field.COMPLEX, np.exp(1j * theta)[:, None] * config.vectors,
                       check_distinct=False)
    if np.any(r <= DEGENERATE_TOL):
        return tilde, Degenerate(r)
    return tilde, PropertyAWitness(r)


def mixed_index_pairs(n: int) -> list:
    subs = list(itertools.combinations(range(n + 1), n))
    return [MixedDetIndex(j, k) for j in subs for k in subs]


def mixed_det(dc: DoubledConfiguration, idx: MixedDetIndex) -> float:
    """|det(u_J, v_K)| for the 2n x 2n matrix with those columns."""
    n = dc.n
    for sub in (idx.J, idx.K):
        if len(sub) != n or min(sub) < 0 or max(sub) > n:
            raise BadIndices(f"index tuple {sub} invalid for n={n}")
    cols = np.concatenate([dc.u[list(idx.J)], dc.v[list(idx.K)]], axis=0)
    return float(abs_det_batch(cols.T[None])[0])


def all_mixed_dets(dc: DoubledConfiguration, log: bool = False) -> np.ndarray:
    """(n+1)^2 mixed determinants, J-major lexicographic order."""
    n = dc.n
    subs = np.array(list(itertools.combinations(range(n + 1), n)))
    uj = dc.u[subs]  # (n+1, n, 2n)
    vk = dc.v[subs]
    mats = np.concatenate(
        [np.repeat(uj, n + 1, axis=0), np.tile(vk, (n + 1, 1, 1))], axis=1
    )
    return abs_det_batch(np.swapaxes(mats, 1, 2), log=log)


def doubled_volume(config: Configuration, witness: PropertyAWitness | None = None) -> float:
    """Volume of the hull of the 2n+2 associated real vectors (Property A required)."""
    _require_simplex_shape(config)
    if witness is None:
        witness = check_property_a(config)
    if witness is None:
        raise NoPropertyA("configuration has no strictly positive null combination")
    dc = associate(config)
    n = config.n
    if n >= 8:
        logs = all_mixed_dets(dc, log=True)
        return float(np.exp(logsumexp(logs) - math.lgamma(2 * n + 1)))
    return math.fsum(all_mixed_dets(dc)) / math.factorial(2 * n)


def nonzero_dets_check(dc: DoubledConfiguration) -> bool:
    return bool(np.all(all_mixed_dets(dc) > 1e-12))


def real_regular_in_Cn(n: int) -> Configuration:
    verts = regular_simplex_vertices(n).vertices
    return from_array(Field.COMPLEX, verts.astype(np.complex128))


def random_property_a_config(rng: np.random.Generator, n: int, tries: int = 100) -> Configuration:
    """A random complex configuration rotated to have Property A."""
    for _ in range(tries):
        tilde, wit = normalize_property_a(random_config(rng, Field.COMPLEX, n, n + 1))
        if isinstance(wit, PropertyAWitness):
            return tilde
    raise RuntimeError("could not draw a non-degenerate configuration")
