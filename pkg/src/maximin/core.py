"""Unit-vector configurations and the maximin determinant objective.

A configuration is a list of ``k+1 > n`` distinct unit vectors in R^n or C^n.
Its determinant spectrum is the sorted list of ``|det|`` over every n-subset
(ascending index order), and the objective is the smallest entry.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadIndices, DuplicateVector, NonFinite, NotUnit, SpectrumTooLarge, WrongArity

UNIT_TOL = 1e-12
DISTINCT_TOL = 1e-9
MAX_SUBSETS = 10**7
_CHUNK = 1 << 15


class Field(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self):
        return np.float64 if self is Field.REAL else np.complex128


@dataclass(frozen=True, eq=False)
class Configuration:
    """Immutable set of unit vectors, stored one vector per row."""

    field: Field
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    @property
    def k(self) -> int:
        return self.count - 1

    def __len__(self):
        return self.count

    def real_coordinates(self) -> np.ndarray:
        """(count, n) for real, (count, 2n) as ``[re, im]`` for complex."""
        if self.field is Field.REAL:
            return self.vectors.copy()
        return np.concatenate([self.vectors.real, self.vectors.imag], axis=1)


def _coerce(field: Field, n: int, raw_vectors) -> np.ndarray:
    field = Field(field)
    rows = list(raw_vectors)
    out = np.empty((len(rows), n), dtype=field.dtype)
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != n:
            raise WrongArity(f"vector {i} has {len(row)} coordinates, expected {n}")
        for j, x in enumerate(row):
            if field is Field.COMPLEX and isinstance(x, (list, tuple, np.ndarray)):
                if len(x) != 2:
                    raise WrongArity(f"vector {i} coordinate {j}: complex pairs need [re, im]")
                x = complex(float(x[0]), float(x[1]))
            elif field is Field.REAL and isinstance(x, complex):
                raise NonFinite(f"vector {i} coordinate {j}: complex value in a real configuration")
            out[i, j] = x
    return out


def _check(field: Field, arr: np.ndarray, check_distinct: bool = True) -> Configuration:
    field = Field(field)
    if arr.ndim != 2 or arr.shape[1] < 1:
        raise WrongArity(f"expected a (count, n) array, got shape {arr.shape}")
    count, n = arr.shape
    if count <= n:
        raise WrongArity(f"need more than n={n} vectors, got {count}")
    if not np.all(np.isfinite(arr)):
        raise NonFinite("configuration contains NaN or infinity")
    norms = np.sqrt(np.sum(np.abs(arr) ** 2, axis=1))
    bad = np.flatnonzero(np.abs(norms - 1.0) > UNIT_TOL)
    if bad.size:
        i = int(bad[0])
        raise NotUnit(f"vector {i} has norm {norms[i]!r}")
    if check_distinct:
        for i in range(count - 1):
            diff = np.max(np.abs(arr[i + 1:] - arr[i]), axis=1)
            close = np.flatnonzero(diff <= DISTINCT_TOL)
            if close.size:
                raise DuplicateVector(f"vectors {i} and {i + 1 + int(close[0])} coincide")
    arr = np.array(arr, dtype=field.dtype)
    arr.setflags(write=False)
    return Configuration(field, arr)


def validate_config(field, n: int, raw_vectors) -> Configuration:
    """Build a Configuration from raw coordinate lists.

    Complex coordinates may be given as Python complex numbers or ``[re, im]``
    pairs. Vectors are never renormalized; a norm off by more than 1e-12 raises
    NotUnit.
    """
    if n < 1:
        raise WrongArity("dimension must be positive")
    return _check(Field(field), _coerce(Field(field), n, raw_vectors))


def from_array(field, arr, check_distinct: bool = True) -> Configuration:
    """Validate a ready-made ``(count, n)`` array."""
    return _check(Field(field), np.asarray(arr, dtype=Field(field).dtype), check_distinct)


def abs_det_batch(mats, log: bool = False) -> np.ndarray:
    """|det| of a stack of square matrices by partial-pivoted elimination.

    The product of the pivot moduli is accumulated in log space; with
    ``log=True`` the log-moduli are returned (``-inf`` for singular input).
    """
    a = np.array(mats, copy=True)
    if not np.iscomplexobj(a):
        a = a.astype(np.float64)
    batch_shape = a.shape[:-2]
    n = a.shape[-1]
    a = a.reshape(-1, n, n)
    b = a.shape[0]
    rows = np.arange(b)
    logabs = np.zeros(b)
    singular = np.zeros(b, dtype=bool)
    for col in range(n):
        piv = col + np.argmax(np.abs(a[:, col:, col]), axis=1)
        top = a[rows, col].copy()
        a[rows, col] = a[rows, piv]
        a[rows, piv] = top
        p = a[:, col, col]
        mod = np.abs(p)
        dead = mod == 0.0
        singular |= dead
        logabs += np.log(np.where(dead, 1.0, mod))
        if col + 1 < n:
            f = a[:, col + 1:, col] / np.where(dead, 1.0, p)[:, None]
            a[:, col + 1:, col:] -= f[:, :, None] * a[:, None, col, col:]
    logabs[singular] = -np.inf
    logabs = logabs.reshape(batch_shape)
    return logabs if log else np.exp(logabs)


def _check_indices(config: Configuration, indices) -> tuple:
    idx = tuple(int(i) for i in indices)
    if len(idx) != config.n:
        raise BadIndices(f"need {config.n} indices, got {len(idx)}")
    if len(set(idx)) != len(idx):
        raise BadIndices(f"repeated index in {idx}")
    if min(idx) < 0 or max(idx) >= config.count:
        raise BadIndices(f"index out of range in {idx}")
    return idx


def det_subset(config: Configuration, indices) -> float:
    """|det| of the selected vectors taken as columns."""
    idx = _check_indices(config, indices)
    return float(abs_det_batch(config.vectors[list(idx)].T[None])[0])


def subset_count(count: int, n: int) -> int:
    return math.comb(count, n)


def subsets(count: int, n: int) -> np.ndarray:
    """All n-subsets of range(count) in lexicographic order, as an int array."""
    m = math.comb(count, n)
    if m > MAX_SUBSETS:
        raise SpectrumTooLarge(f"C({count}, {n}) = {m} exceeds {MAX_SUBSETS}")
    return np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(count), n)),
        dtype=np.intp, count=m * n,
    ).reshape(m, n)


def subset_dets(config: Configuration, subs: np.ndarray | None = None) -> np.ndarray:
    """|det| for every subset, in the order of ``subs`` (lexicographic by default)."""
    if subs is None:
        subs = subsets(config.count, config.n)
    out = np.empty(len(subs))
    for start in range(0, len(subs), _CHUNK):
        block = subs[start:start + _CHUNK]
        out[start:start + len(block)] = abs_det_batch(config.vectors[block])
    return out


@dataclass(frozen=True, eq=False)
class DetSpectrum:
    subsets: np.ndarray  # (m, n), sorted by value, ties in lexicographic order
    values: np.ndarray   # (m,), ascending

    @property
    def min_value(self) -> float:
        return float(self.values[0])

    @property
    def entries(self) -> list:
        return [(tuple(int(i) for i in s), float(v)) for s, v in zip(self.subsets, self.values)]

    def __len__(self):
        return len(self.values)


def det_spectrum(config: Configuration) -> DetSpectrum:
    subs = subsets(config.count, config.n)
    vals = subset_dets(config, subs)
    order = np.argsort(vals, kind="stable")
    s, v = subs[order], vals[order]
    s.setflags(write=False)
    v.setflags(write=False)
    return DetSpectrum(s, v)


def min_det(config: Configuration) -> float:
    """The maximin objective: smallest |det| over all n-subsets.

    Evaluated chunk by chunk, stopping at the first exact zero.
    """
    m = subset_count(config.count, config.n)
    if m > MAX_SUBSETS:
        raise SpectrumTooLarge(f"C({config.count}, {config.n}) = {m} exceeds {MAX_SUBSETS}")
    best = math.inf
    it = itertools.combinations(range(config.count), config.n)
    while True:
        block = list(itertools.islice(it, _CHUNK))
        if not block:
            break
        vals = abs_det_batch(config.vectors[np.array(block)])
        best = min(best, float(vals.min()))
        if best == 0.0:
            break
    return best


def random_unit_vectors(rng: np.random.Generator, count: int, n: int, field=Field.REAL) -> np.ndarray:
    """Uniform samples on the unit sphere of R^n or C^n (= S^{2n-1})."""
    field = Field(field)
    if field is Field.REAL:
        x = rng.standard_normal((count, n))
    else:
        x = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def random_config(rng: np.random.Generator, field, n: int, count: int) -> Configuration:
    return from_array(field, random_unit_vectors(rng, count, n, field))
