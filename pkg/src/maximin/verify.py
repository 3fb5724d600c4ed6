"""Run every identity that applies to a given configuration."""
from __future__ import annotations

import itertools
import math

import numpy as np

from . import complexify as cx
from .core import Configuration, Field, det_spectrum, from_array, subset_dets, subsets
from .errors import DuplicateAfterFold
from .frontier import det_distance_check, fold_upper, spectrum_preserved
from .simplex import max_volume_n_plus_2, regular_det_value

REL = 1e-9


def _rel_close(a, b, tol=REL):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def run_checks(config: Configuration) -> list:
    """List of (name, passed, detail). ``passed`` is None for skipped checks."""
    out = []
    spec = det_spectrum(config)
    d = spec.min_value
    out.append(("spectrum within [0, 1]",
                bool(np.all(spec.values >= 0) and np.all(spec.values <= 1 + 1e-12)),
                f"max {spec.values[-1]:.12g}"))
    if config.count == config.n + 1:
        b = regular_det_value(config.n)
        out.append(("regular-simplex bound", d <= b + 1e-9, f"D {d:.12g} <= {b:.12g}"))
    if config.field is Field.REAL and config.n == 2:
        b = math.sin(math.pi / config.count)
        out.append(("planar bound", d <= b + 1e-9, f"D {d:.12g} <= {b:.12g}"))
        try:
            folded = fold_upper(config)
            ok = spectrum_preserved(config, folded.config())
            out.append(("fold preserves spectrum", ok, ""))
        except DuplicateAfterFold:
            out.append(("fold preserves spectrum", None, "skipped: antiparallel pair"))

    cplx = config if config.field is Field.COMPLEX else from_array(
        Field.COMPLEX, config.vectors.astype(np.complex128))
    worst = 0.0
    for sub in subsets(cplx.count, cplx.n):
        lhs, rhs = cx.block_det_identity(cplx.vectors[sub].T)
        worst = max(worst, abs(lhs - rhs) / max(1.0, lhs))
    out.append(("block determinant identity", worst <= REL, f"worst relative error {worst:.3g}"))

    if cplx.n == 2:
        worst = 0.0
        for a, b in itertools.combinations(cplx.vectors, 2):
            det, dist = det_distance_check(a, b)
            worst = max(worst, abs(det - dist))
        out.append(("stereographic distance identity", worst <= 1e-10, f"worst error {worst:.3g}"))

    if cplx.count == cplx.n + 1:
        tilde, wit = cx.normalize_property_a(cplx)
        out.append(("normalization preserves spectrum", spectrum_preserved(cplx, tilde), ""))
        if isinstance(wit, cx.Degenerate):
            out.append(("property A witness", None, "degenerate: D = 0"))
            return out
        out.append(("property A witness", wit.is_valid(tilde),
                    f"residual {wit.residual(tilde):.3g}"))
        dc = cx.associate(tilde)
        mixed = cx.all_mixed_dets(dc)
        single = subset_dets(tilde)
        prod = np.outer(single, single).ravel()
        ok = all(_rel_close(m, p) for m, p in zip(mixed, prod))
        out.append(("mixed determinant product identity", ok, ""))
        out.append(("min mixed determinant = D^2", _rel_close(mixed.min(), d * d), ""))
        vol = cx.doubled_volume(tilde, wit)
        vmax = max_volume_n_plus_2(2 * cplx.n)
        out.append(("doubled volume <= maximum", vol <= vmax + 1e-9,
                    f"{vol:.12g} <= {vmax:.12g}"))
    return out


def format_checks(checks) -> str:
    lines = []
    for name, ok, detail in checks:
        tag = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        lines.append(f"{tag} {name}" + (f" ({detail})" if detail else ""))
    return "\n".join(lines) + "\n"
