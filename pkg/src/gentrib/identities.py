# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Batch verification of the sequence identities.

Each ``check_*`` function evaluates one identity for one parameter set over an inclusive index range and returns a
``CheckReport``. Exact identities (Cassini-type, matrix forms, U-decomposition) compare Python integers and must hold
with zero residual for every integer parameter choice. Floating-point identities (Binet forms, quadratic
approximation) compare against the exact values with residuals normalized by the magnitude of the participating
terms, and require Delta(r, s, t) > 0.

``run_suite`` fans the checks of a ``SuiteConfig`` out over a parameter pool and returns the reports in a
deterministic order.
"""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from gentrib.analytic import (
    binet_magnitude,
    discriminant,
    linear_form_check,
    params_roots,
    quad_approx_residuals,
    u_binet,
    v_binet,
    v_from_u,
)
from gentrib.matrix import (
    cassini_u_lhs,
    cassini_v_lhs,
    companion,
    det3,
    mat_pow,
    matrix_quadratic,
    st_form_matrix,
    u_form,
    v_shift_matrix,
)
from gentrib.notation import format_params, parse_params
from gentrib.quaternion import quaternion_binet, quaternion_quad_residuals, seq_quaternion
from gentrib.seq_core import SequenceParams, cassini_seed, fundamental, make_params, terms_range
from gentrib.suite_config import FLOATING_IDENTITIES, IDENTITY_IDS, SuiteConfig

logger = logging.getLogger(__name__)

__all__ = [
    "IDENTITY_IDS",
    "CheckReport",
    "check_binet",
    "check_cassini_u",
    "check_cassini_v",
    "check_lemma9",
    "check_matrix_forms",
    "check_matrix_quadratic",
    "check_quad_approx",
    "check_quaternion_binet",
    "pool_params",
    "run_suite",
]

NRange = tuple[int, int]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check over one parameter set and index range.

    ``status`` is derived from ``failures``, so a report passes exactly when no index failed.
    """

    identity_id: str
    params: SequenceParams
    index_range: NRange
    worst_residual: float = 0.0
    failures: tuple[tuple[int, str], ...] = ()
    notes: tuple[str, ...] = ()
    seed: int | None = None

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "params": format_params(self.params),
            "range": list(self.index_range),
            "status": self.status,
            "worst_residual": self.worst_residual,
            "failures": [{"n": n, "detail": detail} for n, detail in self.failures],
            "notes": list(self.notes),
            "seed": self.seed,
        }


@dataclass
class _Tally:
    """Mutable accumulator behind a single check."""

    worst: float = 0.0
    failures: list[tuple[int, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def exact(self, n: int, label: str, lhs: Any, rhs: Any) -> None:
        if lhs != rhs:
            self.failures.append((n, f"{label}: {lhs} != {rhs}"))

    def floating(self, n: int, label: str, residual: float, raw: float, rel_tol: float, abs_tol: float) -> None:
        self.worst = max(self.worst, residual)
        if residual > rel_tol and raw > abs_tol:
            self.failures.append((n, f"{label}: residual {residual:.3e} above tolerance {rel_tol:.1e}"))

    def report(self, identity_id: str, p: SequenceParams, n_range: NRange) -> CheckReport:
        report = CheckReport(identity_id, p, n_range, self.worst, tuple(self.failures), tuple(self.notes))
        logger.debug(f"{identity_id} on {format_params(p)} over {n_range}: {report.status}")
        return report


def _check_range(n_range: NRange, floor: int = 0) -> range:
    n_lo, n_hi = n_range
    if n_lo < floor:
        raise ValueError(f"Index range must start at n >= {floor}. Got {n_range} instead")
    if n_lo > n_hi:
        raise ValueError(f"Invalid index range: n_lo must be <= n_hi. Got {n_range} instead")
    return range(n_lo, n_hi + 1)


def check_cassini_u(r: int, s: int, t: int, n_range: NRange) -> CheckReport:
    """Exact check of ``U_n^3 + ... - U_{n-2} U_n U_{n+2} = t^(n-2)`` for the fundamental sequence (n >= 2).

    The determinant of the U-form of ``M^n`` is checked alongside, against ``t^n``.
    """
    p = make_params(0, 0, 1, r, s, t)
    tally = _Tally()
    for n in _check_range(n_range, floor=2):
        tally.exact(n, "Cassini U", cassini_u_lhs(r, s, t, n), t ** (n - 2))
        tally.exact(n, "det U-form", det3(u_form(r, s, t, n)), t**n)
    return tally.report("cassini_u", p, n_range)


def check_cassini_v(p: SequenceParams, n_range: NRange) -> CheckReport:
    """Exact check of ``V_{n+2}^3 + ... - V_{n+2} (2 V_{n+1} V_{n+3} + V_n V_{n+4}) = t^n g(0)``."""
    g0 = cassini_seed(p)
    tally = _Tally()
    for n in _check_range(n_range):
        tally.exact(n, "Cassini V", cassini_v_lhs(p, n), p.t**n * g0)
    if p.t == 0:
        tally.notes.append("t = 0: right-hand side vanishes for n >= 1")
    return tally.report("cassini_v", p, n_range)


def _check_u_form(p: SequenceParams, n_range: NRange, tally: _Tally) -> None:
    m = companion(p)
    n_lo, n_hi = n_range
    if n_hi < 2:
        tally.notes.append("U-form needs n >= 2: no index checked")
        return
    if n_lo < 2:
        tally.notes.append("U-form needs n >= 2: lower indices skipped")
    for n in range(max(2, n_lo), n_hi + 1):
        tally.exact(n, "M^n vs U-form", mat_pow(m, n), u_form(p.r, p.s, p.t, n))


def _check_shift_forms(p: SequenceParams, n_range: NRange, tally: _Tally) -> None:
    m = companion(p)
    st_base = st_form_matrix(p, 0)
    sum_base = v_shift_matrix(p, 0)
    if p.t == 0:
        tally.notes.append("sum-form skipped: t = 0")
    for n in range(n_range[0], n_range[1] + 1):
        power = mat_pow(m, n)
        tally.exact(n, "st-form", power @ st_base, st_form_matrix(p, n))
        if p.t != 0:
            tally.exact(n, "sum-form", power @ sum_base, v_shift_matrix(p, n))


def check_matrix_forms(p: SequenceParams, n_range: NRange, *, forms: tuple[str, ...] = ("u", "shift")) -> CheckReport:
    """Exact entrywise checks of the closed matrix forms of ``M^n``.

    Two forms are available:
        - "u": ``M^n`` equals the U-form (n >= 2; lower indices in the range are skipped with a note).
        - "shift": ``M^n`` times the window matrix at 0 equals the window matrix at n, in the (s, t)-form always and in
          the sum form when t != 0.

    Args:
        forms (tuple[str, ...]): Which forms to check. The report id follows the selection.
    """
    _check_range(n_range)
    tally = _Tally()
    if "u" in forms:
        _check_u_form(p, n_range, tally)
    if "shift" in forms:
        _check_shift_forms(p, n_range, tally)

    if forms == ("u",):
        identity_id = "matrix_form_12"
    elif forms == ("shift",):
        identity_id = "matrix_form_14"
    else:
        identity_id = "matrix_forms"
    return tally.report(identity_id, p, n_range)


def check_matrix_quadratic(p: SequenceParams, n_range: NRange) -> CheckReport:
    """Exact checks of the matrix substitution ``Z_n = V_{n+2} M^2 + (s V_{n+1} + t V_n) M + t V_{n+1} I``.

    At every n: ``Z_n`` equals the (s, t)-form window matrix, ``M^n Z_0 = Z_n``, and, for the fundamental sequence U
    of ``p`` and n >= 2, ``Z_{n-2}(U) = M^n``.
    """
    m = companion(p)
    u = fundamental(p)
    base = matrix_quadratic(p, 0)
    tally = _Tally()
    for n in _check_range(n_range):
        z_n = matrix_quadratic(p, n)
        power = mat_pow(m, n)
        tally.exact(n, "quadratic vs st-form", z_n, st_form_matrix(p, n))
        tally.exact(n, "M^n Z_0 vs Z_n", power @ base, z_n)
        if n >= 2:
            tally.exact(n, "U quadratic vs M^n", matrix_quadratic(u, n - 2), power)
    return tally.report("matrix_quadratic", p, n_range)


def check_quad_approx(
    p: SequenceParams, n_range: NRange, tol: float = 1e-8, abs_tol: float = 1e-9
) -> CheckReport:
    """Relative residuals of the quadratic approximation, for each root, and of its linear form for alpha.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    """
    roots = params_roots(p)
    alpha, omega_sq = abs(roots.alpha), abs(roots.omega1) ** 2
    tally = _Tally()
    for n in _check_range(n_range):
        rel = quad_approx_residuals(p, n, roots, relative=True)
        raw = quad_approx_residuals(p, n, roots)
        for name, residual, raw_residual in zip(rel._fields, rel, raw, strict=True):
            tally.floating(n, f"quadratic ({name})", residual, raw_residual, tol, abs_tol)

        v_n, v_n1, v_n2 = terms_range(p, n, n + 2)
        linear = linear_form_check(p, n, roots)
        scale = max(1.0, alpha * abs(v_n2) + (abs(p.s) + omega_sq) * abs(v_n1) + abs(p.t * v_n))
        tally.floating(n, "linear form", linear / scale, linear, tol, abs_tol)
    return tally.report("quad_approx", p, n_range)


def check_binet(p: SequenceParams, n_range: NRange, tol: float = 1e-8, abs_tol: float = 1e-9) -> CheckReport:
    """Closed forms of V_n and of the fundamental U_n against exact iteration.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    """
    roots = params_roots(p)
    u = fundamental(p)
    indices = _check_range(n_range)
    exact_v = terms_range(p, *n_range)
    exact_u = terms_range(u, *n_range)
    tally = _Tally()
    for n, v_n, u_n in zip(indices, exact_v, exact_u, strict=True):
        for label, params, closed, exact in (
            ("V Binet", p, v_binet(p, n, roots), v_n),
            ("U Binet", u, u_binet(roots, n), u_n),
        ):
            raw = abs(closed.value - exact)
            scale = max(1.0, abs(exact), binet_magnitude(params, n, roots))
            tally.floating(n, label, raw / scale, raw, tol, abs_tol)
    return tally.report("binet_v", p, n_range)


def check_quaternion_binet(
    p: SequenceParams, n_range: NRange, tol: float = 1e-8, abs_tol: float = 1e-9
) -> CheckReport:
    """Componentwise closed form of the sequence quaternions, and their quadratic approximation, against exact values.

    Raises
    ------
    DeltaNotPositive
        If Delta(r, s, t) <= 0.
    """
    roots = params_roots(p)
    tally = _Tally()
    for n in _check_range(n_range):
        closed = quaternion_binet(p, n, roots).real_part()
        exact = seq_quaternion(p, n)
        for k, (approx, component) in enumerate(zip(closed, exact, strict=True)):
            raw = abs(approx - component)
            scale = max(1.0, abs(component), binet_magnitude(p, n + k, roots))
            tally.floating(n, f"quaternion component {k}", raw / scale, raw, tol, abs_tol)

        rel = quaternion_quad_residuals(p, n, roots, relative=True)
        raw = quaternion_quad_residuals(p, n, roots)
        for name, residual, raw_residual in zip(rel._fields, rel, raw, strict=True):
            tally.floating(n, f"quaternion quadratic ({name})", residual, raw_residual, tol, abs_tol)
    return tally.report("binet_quaternion", p, n_range)


def check_lemma9(p: SequenceParams, n_range: NRange) -> CheckReport:
    """Exact check of ``V_n = V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}`` for n >= 2."""
    n_lo, n_hi = n_range
    _check_range(n_range)
    tally = _Tally()
    if n_lo < 2:
        tally.notes.append("U-decomposition needs n >= 2: lower indices skipped")
    indices = range(max(2, n_lo), n_hi + 1)
    if indices:
        exact = terms_range(p, indices.start, n_hi)
        for n, v_n in zip(indices, exact, strict=True):
            tally.exact(n, "U-decomposition", v_from_u(p, n), v_n)
    return tally.report("lemma_9", p, n_range)


def pool_params(cfg: SuiteConfig) -> list[SequenceParams]:
    """The deterministic parameter pool of a suite: presets, then explicit sets, then seeded random sets.

    Duplicates are dropped, keeping the first occurrence.
    """
    pool = [parse_params(text) for text in cfg.presets]
    pool.extend(cfg.params)

    if cfg.random_count:
        rng = np.random.default_rng(cfg.seed)
        seeds = rng.integers(-cfg.init_bound, cfg.init_bound, size=(cfg.random_count, 3), endpoint=True)
        coefs = rng.integers(-cfg.coef_bound, cfg.coef_bound, size=(cfg.random_count, 3), endpoint=True)
        for v, c in zip(seeds.tolist(), coefs.tolist(), strict=True):
            pool.append(make_params(*v, *c))

    return list(dict.fromkeys(pool))


def _tasks(cfg: SuiteConfig, pool: list[SequenceParams]) -> list[Callable[[], CheckReport]]:
    explicit = set(cfg.params)
    n_range = (cfg.n_lo, cfg.n_hi)
    tol = {"tol": cfg.rel_tol, "abs_tol": cfg.abs_tol}
    tasks = []

    def task(fn, *args, **kwargs):
        tasks.append(lambda: fn(*args, **kwargs))

    for identity_id in cfg.identities:
        members = pool
        if identity_id in FLOATING_IDENTITIES:
            # explicit sets are kept so that a violated Delta > 0 gate surfaces as an error
            members = [p for p in pool if p in explicit or discriminant(p.r, p.s, p.t) > 0]
            skipped = len(pool) - len(members)
            if skipped:
                logger.info(f"{identity_id}: {skipped} parameter set(s) with Delta <= 0 left out")

        if identity_id == "cassini_u":
            if cfg.n_hi < 2:
                logger.info("cassini_u: index range below 2, nothing to check")
                continue
            for r, s, t in dict.fromkeys(p.coefficients for p in members):
                task(check_cassini_u, r, s, t, (max(2, cfg.n_lo), cfg.n_hi))
            continue

        for p in members:
            match identity_id:
                case "cassini_v":
                    task(check_cassini_v, p, n_range)
                case "matrix_form_12":
                    task(check_matrix_forms, p, n_range, forms=("u",))
                case "matrix_form_14":
                    task(check_matrix_forms, p, n_range, forms=("shift",))
                case "matrix_quadratic":
                    task(check_matrix_quadratic, p, n_range)
                case "quad_approx":
                    task(check_quad_approx, p, n_range, **tol)
                case "binet_v":
                    task(check_binet, p, n_range, **tol)
                case "binet_quaternion":
                    task(check_quaternion_binet, p, n_range, **tol)
                case "lemma_9":
                    task(check_lemma9, p, n_range)
    return tasks


def run_suite(cfg: SuiteConfig) -> list[CheckReport]:
    """Run every requested identity check over the pool of ``cfg``.

    Reports are ordered by (identity_id, params, n_lo) whatever the number of workers, so the output is a pure
    function of the configuration.

    Raises
    ------
    DeltaNotPositive
        If a floating-point identity is requested for an explicit parameter set with Delta(r, s, t) <= 0.
    """
    cfg.validate()
    pool = pool_params(cfg)
    tasks = _tasks(cfg, pool)
    logger.info(f"Running {len(tasks)} check(s) over {len(pool)} parameter set(s) with {cfg.workers} worker(s)")

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [executor.submit(fn) for fn in tasks]
            reports = [future.result() for future in futures]
    else:
        reports = [fn() for fn in tasks]

    seed = cfg.seed if cfg.random_count else None
    reports = [
        CheckReport(r.identity_id, r.params, r.index_range, r.worst_residual, r.failures, r.notes, seed)
        for r in reports
    ]
    reports.sort(key=lambda r: (r.identity_id, tuple(r.params), r.index_range[0]))

    failed = sum(not r.passed for r in reports)
    logger.info(f"Suite finished: {len(reports) - failed} passed, {failed} failed")
    return reports
