"""Maximise the minimum |det| by annealed log-sum-exp smoothing and projected ascent.

Each configuration is a point on a product of spheres (complex vectors are
treated as unit vectors in R^{2n}). The smoothed objective

    softmin_beta(d) = -(1/beta) * log(sum_S exp(-beta * d_S))

is ascended with a Riemannian gradient step followed by renormalisation.
Restarts run as one vectorised batch; each keeps its own step size and stops
independently.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field

import numpy as np
from scipy.special import logsumexp, softmax

from .core import Configuration, Field, MAX_SUBSETS, from_array, min_det, random_unit_vectors, subsets
from .errors import BoundViolated, DuplicateVector, SpectrumTooLarge, WrongArity
from .simplex import regular_det_value

DET_FLOOR = 1e-300
STEP_FLOOR = 1e-9
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class Problem:
    field: Field
    n: int
    count: int

    def __post_init__(self):
        object.__setattr__(self, "field", Field(self.field))
        if self.n < 1 or self.count <= self.n:
            raise WrongArity(f"need count > n >= 1, got n={self.n}, count={self.count}")
        if self.field is Field.REAL and self.n == 1 and self.count > 2:
            raise WrongArity("R^1 holds only two distinct unit vectors")
        m = math.comb(self.count, self.n)
        if m > MAX_SUBSETS:
            raise SpectrumTooLarge(f"C({self.count}, {self.n}) = {m} exceeds {MAX_SUBSETS}")

    @property
    def dim(self) -> int:
        """Real coordinates per vector."""
        return self.n if self.field is Field.REAL else 2 * self.n


@dataclass(frozen=True)
class SolverParams:
    restarts: int = 64
    max_iters: int = 2000
    softmin_beta_schedule: tuple = (10.0, 100.0, 1000.0, 10000.0)
    step_size: float = 0.05
    seed: int = 0
    tol: float = 1e-10

    def __post_init__(self):
        sched = tuple(float(b) for b in self.softmin_beta_schedule)
        object.__setattr__(self, "softmin_beta_schedule", sched)
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be positive")
        if not sched or min(sched) <= 0 or any(b < a for a, b in zip(sched, sched[1:])):
            raise ValueError("beta schedule must be positive and nondecreasing")
        if self.step_size <= 0 or self.tol <= 0:
            raise ValueError("step_size and tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class RestartRecord:
    index: int
    value: float
    iterations: int
    wall_time: float


@dataclass(frozen=True, eq=False)
class SolverResult:
    problem: Problem
    params: SolverParams
    best: Configuration
    best_value: float
    bound: float | None
    gap: float | None
    telemetry: list = dc_field(default_factory=list)
    best_restart: int = 0


# -- smoothed objective --------------------------------------------------------

def _to_vectors(field: Field, n: int, x: np.ndarray) -> np.ndarray:
    if field is Field.REAL:
        return x
    return x[..., :n] + 1j * x[..., n:]


class _Evaluator:
    """Batched |det| values and their gradients for one problem shape."""

    def __init__(self, field: Field, n: int, count: int):
        self.field = Field(field)
        self.n = n
        self.count = count
        self.subs = subsets(count, n)
        m = len(self.subs)
        inc = np.zeros((m, n, count))
        inc[np.arange(m)[:, None], np.arange(n)[None, :], self.subs] = 1.0
        self.incidence = inc

    def to_vectors(self, x: np.ndarray) -> np.ndarray:
        return _to_vectors(self.field, self.n, x)

    def dets(self, x: np.ndarray) -> np.ndarray:
        """|det| per subset for a batch ``x`` of shape (B, count, dim)."""
        mats = self.to_vectors(x)[:, self.subs]
        return np.prod(np.linalg.svd(mats, compute_uv=False), axis=-1)

    def dets_and_grads(self, x: np.ndarray):
        mats = self.to_vectors(x)[:, self.subs]  # (B, m, n, n), rows are vectors
        u, s, vh = np.linalg.svd(mats)
        d = np.prod(s, axis=-1)
        # |det| * A^{-T} (real) or its complex analogue U diag(prod_{j!=i} s_j) V^H;
        # finite at singular A
        n = self.n
        q = np.empty_like(s)
        for i in range(n):
            q[..., i] = np.prod(np.delete(s, i, axis=-1), axis=-1) if n > 1 else 1.0
        g = (u * q[..., None, :]) @ vh
        if self.field is Field.COMPLEX:
            g = np.concatenate([g.real, g.imag], axis=-1)
        return d, g

    def softmin(self, x: np.ndarray, beta: float, grad: bool = True):
        if grad:
            d, g = self.dets_and_grads(x)
        else:
            d, g = self.dets(x), None
        dc = np.maximum(d, DET_FLOOR)
        val = -logsumexp(-beta * dc, axis=-1) / beta
        if not grad:
            return val, None, d.min(axis=-1)
        w = softmax(-beta * dc, axis=-1)
        gx = np.einsum("bm,bmpk,mpc->bck", w, g, self.incidence)
        return val, gx, d.min(axis=-1)


def _tangent(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    return g - np.sum(g * x, axis=-1, keepdims=True) * x


def _normalize_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def softmin_objective(config: Configuration, beta: float):
    """Smoothed minimum of the determinant spectrum and its Euclidean gradient.

    The gradient is flattened vector by vector; complex vectors contribute
    ``[d/d re, d/d im]`` blocks of length 2n.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    ev = _Evaluator(config.field, config.n, config.count)
    x = config.real_coordinates()[None]
    val, g, _ = ev.softmin(x, beta)
    return float(val[0]), g[0].reshape(-1)


def project_to_spheres(raw, problem: Problem, rng: np.random.Generator | None = None) -> Configuration:
    """Rescale every vector to unit norm; vectors shorter than 1e-8 are resampled."""
    x = np.array(raw, dtype=np.float64).reshape(problem.count, problem.dim)
    norms = np.linalg.norm(x, axis=1)
    small = norms < 1e-8
    if np.any(small):
        rng = rng if rng is not None else np.random.default_rng(0)
        x[small] = random_unit_vectors(rng, int(small.sum()), problem.dim)
        norms[small] = 1.0
    x = x / norms[:, None]
    return from_array(problem.field, _to_vectors(problem.field, problem.n, x))


# -- ascent ----------------------------------------------------------------------

def _ascend(ev: _Evaluator, x0: np.ndarray, params: SolverParams):
    """Run the beta schedule on a batch; returns best-by-true-objective states."""
    x = x0.copy()
    best_x = x0.copy()
    best_val = ev.dets(x0).min(axis=-1)
    iters = np.zeros(len(x), dtype=int)
    sched = params.softmin_beta_schedule
    for stage, beta in enumerate(sched):
        final = stage == len(sched) - 1
        step = np.full(len(x), params.step_size)
        active = np.ones(len(x), dtype=bool)
        val, g, tmin = ev.softmin(x, beta)
        for _ in range(params.max_iters):
            idx = np.flatnonzero(active)
            if idx.size == 0:
                break
            xa = x[idx]
            cand = _normalize_rows(xa + step[idx, None, None] * _tangent(xa, g[idx]))
            cval, cg, cmin = ev.softmin(cand, beta)
            ok = cval > val[idx]
            if final:
                ok &= cmin >= tmin[idx]
            acc, rej = idx[ok], idx[~ok]
            gain = cval[ok] - val[acc]
            x[acc], val[acc], g[acc], tmin[acc] = cand[ok], cval[ok], cg[ok], cmin[ok]
            iters[idx] += 1
            step[acc] *= 1.25
            step[rej] *= 0.5
            active[acc[gain < params.tol]] = False
            active[rej[step[rej] < STEP_FLOOR]] = False
        better = tmin > best_val
        best_x[better] = x[better]
        best_val[better] = tmin[better]
        # continue from the best state so later stages never start behind
        x = best_x.copy()
    return best_x, best_val, iters


def _restart_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def refine(config: Configuration, params: SolverParams = SolverParams()) -> Configuration:
    """Projected ascent from ``config``; never returns a smaller objective."""
    ev = _Evaluator(config.field, config.n, config.count)
    start = config.real_coordinates()[None]
    best_x, best_val, _ = _ascend(ev, start, params)
    if best_val[0] <= min_det(config):
        return config
    out = from_array(config.field, ev.to_vectors(_normalize_rows(best_x[0])))
    return out if min_det(out) >= min_det(config) else config


def closed_form_bound(problem: Problem) -> float | None:
    if problem.count == problem.n + 1:
        return regular_det_value(problem.n)
    if problem.field is Field.REAL and problem.n == 2:
        return math.sin(math.pi / problem.count)
    return None


def solve(problem: Problem, params: SolverParams = SolverParams()) -> SolverResult:
    ev = _Evaluator(problem.field, problem.n, problem.count)
    x0 = np.stack([
        _restart_rng(params.seed, i).standard_normal((problem.count, problem.dim))
        for i in range(params.restarts)
    ])
    x0 = _normalize_rows(x0)
    t0 = time.perf_counter()
    best_x, _, iters = _ascend(ev, x0, params)
    elapsed = time.perf_counter() - t0
    best_x = _normalize_rows(best_x)
    values = ev.dets(best_x).min(axis=-1)
    telemetry = [
        RestartRecord(i, float(values[i]), int(iters[i]), elapsed / params.restarts)
        for i in range(params.restarts)
    ]
    # stable sort: ties go to the lower restart index
    best = None
    for i in np.argsort(-values, kind="stable"):
        try:
            best = from_array(problem.field, ev.to_vectors(best_x[i]))
            best_index = int(i)
            break
        except DuplicateVector:
            continue
    if best is None:
        raise DuplicateVector("every restart collapsed onto repeated vectors")
    value = min_det(best)
    bound = closed_form_bound(problem)
    gap = None if bound is None else bound - value
    return SolverResult(problem, params, best, value, bound, gap, telemetry, best_index)


@dataclass(frozen=True)
class BoundReport:
    best_value: float
    bound: float | None
    gap: float | None
    text: str


def certify_upper_bound(result: SolverResult) -> BoundReport:
    """Check the solver against the closed-form bound; a violation is a bug."""
    if result.bound is None:
        text = (f"best = {result.best_value:.12g}; "
                "no closed form; conjecture evidence only")
        return BoundReport(result.best_value, None, None, text)
    if result.best_value > result.bound + BOUND_SLACK:
        raise BoundViolated(
            f"best {result.best_value:.17g} exceeds bound {result.bound:.17g}")
    text = (f"best = {result.best_value:.12g}; bound = {result.bound:.12g}; "
            f"gap = {result.gap:.12g}; bound respected")
    return BoundReport(result.best_value, result.bound, result.gap, text)


def format_report(result: SolverResult) -> str:
    p = result.problem
    lines = [
        f"problem: field={p.field.value} n={p.n} count={p.count}",
        f"params: restarts={result.params.restarts} max_iters={result.params.max_iters} "
        f"seed={result.params.seed} tol={result.params.tol:.12g}",
        f"best_value: {result.best_value:.12g}",
        f"best_restart: {result.best_restart}",
        f"bound: {'none' if result.bound is None else format(result.bound, '.12g')}",
        f"gap: {'none' if result.gap is None else format(result.gap, '.12g')}",
        f"certificate: {certify_upper_bound(result).text}",
        "restarts:",
    ]
    for rec in result.telemetry:
        lines.append(f"  {rec.index:4d} value={rec.value:.12g} iterations={rec.iterations}")
    return "\n".join(lines) + "\n"
