# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Timing of the three evaluation paths of V_n.

    iter    O(n) forward iteration (``term_iterative`` / ``term_iterative_mod``)
    matrix  O(log n) companion-matrix power (``term_by_matrix`` / ``term_by_matrix_mod``)
    binet   O(1) closed form (``v_binet``), exact arithmetic only, Delta > 0

Every row carries a digest of the computed value so that paths can be compared without printing huge integers.
``run_bench`` refuses to return timings for an index where the paths disagree.
"""

import csv
import hashlib
import logging
import statistics
import time
from collections.abc import Callable, Iterable
from typing import IO, NamedTuple

from gentrib.analytic import binet_magnitude, is_close, params_roots, v_binet
from gentrib.matrix import term_by_matrix, term_by_matrix_mod
from gentrib.seq_core import SequenceParams, require_exact, term_iterative, term_iterative_mod

logger = logging.getLogger(__name__)

METHODS = ("iter", "matrix", "binet")

SPOT_CHECK_LIMIT = 10**6
"""Largest index cross-checked against the O(n) modular iteration."""

ITER_WARN_N = 10**7

CSV_HEADER = ("method", "n", "modulus", "median_ns", "min_ns", "digest")


class BenchmarkMismatch(RuntimeError):
    """Raised when evaluation paths disagree, so no timing can be reported."""


class BenchRow(NamedTuple):
    """
    One timing row.

    Returns
    -------
    object
        - method (str): "iter", "matrix" or "binet".
        - n (int): The index.
        - modulus (int or None): The modulus of a modular run.
        - median_ns (int): Median wall time over the repetitions, in nanoseconds.
        - min_ns (int): Fastest repetition, in nanoseconds.
        - digest (str): First 16 hex digits of the SHA-256 of the result in hexadecimal (binet: rounded result).
    """

    method: str
    n: int
    modulus: int | None
    median_ns: int
    min_ns: int
    digest: str


def digest(value: int) -> str:
    # hexadecimal formatting is not subject to the int-to-str digit limit
    return hashlib.sha256(format(value, "x").encode()).hexdigest()[:16]


def _evaluator(p: SequenceParams, n: int, method: str, modulus: int | None) -> Callable[[], int | float]:
    if method not in METHODS:
        raise ValueError(f"Method = {method} not allowed. Allowed values are {list(METHODS)}")
    if method == "binet":
        if modulus is not None:
            raise ValueError("The binet method has no modular variant")
        roots = params_roots(p)
        return lambda: v_binet(p, n, roots).value
    if modulus is None:
        return (lambda: term_iterative(p, n)) if method == "iter" else (lambda: term_by_matrix(p, n))
    if method == "iter":
        return lambda: term_iterative_mod(p, n, modulus)
    return lambda: term_by_matrix_mod(p, n, modulus)


def _measure(
    p: SequenceParams, n: int, method: str, repetitions: int, modulus: int | None
) -> tuple[int | float, BenchRow]:
    if repetitions < 1:
        raise ValueError(f"Repetitions must be a positive integer. Got {repetitions} instead")
    if method == "iter" and n > ITER_WARN_N:
        logger.warning(f"Iterating the recurrence {n} times, this will take a while")

    fn = _evaluator(p, n, method, modulus)
    times = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        value = fn()
        times.append(time.perf_counter_ns() - start)

    shown = round(value) if method == "binet" else value
    row = BenchRow(method, n, modulus, int(statistics.median(times)), min(times), digest(shown))
    logger.info(f"{method:>6} n={n} median={row.median_ns} ns min={row.min_ns} ns digest={row.digest}")
    return value, row


def bench_term(
    p: SequenceParams, n: int, method: str, repetitions: int = 5, modulus: int | None = None
) -> BenchRow:
    """Time one evaluation path of V_n.

    Parameters
    ----------
    p : SequenceParams, required
        Integer sequence parameters.

    n : int, required
        Index of the term.

    method : str, required
        One of "iter", "matrix" or "binet".

    repetitions : int, optional, default=5
        Number of timed evaluations.

    modulus : int or None, optional, default=None
        Evaluate V_n mod ``modulus`` (iter and matrix only).

    Returns
    -------
    BenchRow
        Timing statistics and the result digest.
    """
    require_exact(p)
    return _measure(p, n, method, repetitions, modulus)[1]


def _cross_check(
    p: SequenceParams, n: int, values: dict[str, int | float], modulus: int | None, rel_tol: float, spot_check_limit: int
) -> None:
    exact = {m: v for m, v in values.items() if m != "binet"}
    if len(set(exact.values())) > 1:
        raise BenchmarkMismatch(f"Exact paths disagree at {n=}: digests {[(m, digest(v)) for m, v in exact.items()]}")

    if "binet" in values:
        reference = exact.get("iter", exact.get("matrix"))
        if reference is None:
            reference = term_by_matrix(p, n)
        if not is_close(values["binet"], reference, rel_tol, binet_magnitude(p, n)):
            raise BenchmarkMismatch(f"Closed form {values['binet']!r} disagrees with V_{n} beyond {rel_tol=}")

    if modulus is None:
        return
    if n <= spot_check_limit:
        if "iter" not in exact:
            oracle = term_iterative_mod(p, n, modulus)
            if set(exact.values()) != {oracle}:
                raise BenchmarkMismatch(f"Modular matrix path disagrees with iteration at {n=}, {modulus=}")
        return

    spot = spot_check_limit
    if term_by_matrix_mod(p, spot, modulus) != term_iterative_mod(p, spot, modulus):
        raise BenchmarkMismatch(f"Modular matrix path disagrees with iteration at spot n={spot}, {modulus=}")
    logger.info(f"n={n} is beyond the iteration oracle, spot-checked the matrix path at n={spot}")


def run_bench(
    p: SequenceParams,
    ns: Iterable[int],
    methods: Iterable[str] = ("iter", "matrix"),
    repetitions: int = 5,
    modulus: int | None = None,
    *,
    rel_tol: float = 1e-8,
    spot_check_limit: int = SPOT_CHECK_LIMIT,
) -> list[BenchRow]:
    """Time several paths at several indices, cross-checking the results of every index first.

    Exact paths must agree exactly and the closed form must agree within ``rel_tol`` (relative to the magnitude of its
    terms). In modular runs the result is compared with the O(n) modular iteration when ``n <= spot_check_limit``, and
    otherwise the matrix path is spot-checked against it at ``n = spot_check_limit``.

    Raises
    ------
    BenchmarkMismatch
        If two paths disagree at some index, or the closed form overflows.
    DeltaNotPositive
        If "binet" is requested and Delta(r, s, t) <= 0.
    """
    require_exact(p)
    methods = tuple(dict.fromkeys(methods))
    rows = []
    for n in ns:
        values = {}
        row_n = []
        for method in methods:
            try:
                value, row = _measure(p, n, method, repetitions, modulus)
            except OverflowError as err:
                raise BenchmarkMismatch(f"The closed form overflows at {n=}: {err}") from err
            values[method] = value
            row_n.append(row)
        _cross_check(p, n, values, modulus, rel_tol, spot_check_limit)
        rows.extend(row_n)
    return rows


def write_csv(rows: Iterable[BenchRow], stream: IO[str]) -> None:
    """Write rows with the header ``method,n,modulus,median_ns,min_ns,digest``; no modulus is an empty field."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(("" if value is None else value for value in row))
