# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Configuration of an identity verification run.

A suite can be configured directly in Python or loaded from a YAML file such as

    presets: [tribonacci, padovan, "narayana:2"]
    params: ["V(5,-2,3;1,2,1)"]
    random_count: 25
    seed: 20240501
    n_hi: 40
    rel_tol: 1.0e-8
    identities: [cassini_u, cassini_v, binet_v]

Every key is optional. Parameter sets are written in the notation understood by ``gentrib.notation``.
"""

import logging
from pathlib import Path
from typing import Any

from ruamel.yaml import YAML

from gentrib.notation import format_params, parse_params
from gentrib.seq_core import SequenceParams

logger = logging.getLogger(__name__)

IDENTITY_IDS = (
    "cassini_u",
    "cassini_v",
    "matrix_form_12",
    "matrix_form_14",
    "matrix_quadratic",
    "quad_approx",
    "binet_v",
    "binet_quaternion",
    "lemma_9",
)

FLOATING_IDENTITIES = frozenset({"quad_approx", "binet_v", "binet_quaternion"})

DEFAULT_PRESETS = ("tribonacci", "padovan", "narayana:1", "narayana:2", "narayana:3")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class SuiteConfig:
    """
    Configuration class for a batch verification of the sequence identities.

    Parameters
    ----------
    presets : sequence of str, optional, default=DEFAULT_PRESETS
        Preset names in notation form ("tribonacci", "padovan", "narayana:<k>") added to the pool.

    params : sequence of SequenceParams, optional, default=()
        Explicit parameter sets added to the pool. Floating-point identities are always run on these, so an explicit
        set with Delta(r, s, t) <= 0 makes the run fail with ``DeltaNotPositive``.

    random_count : int, optional, default=25
        Number of seeded random parameter sets added to the pool. Must be non-negative.

    seed : int, optional, default=20240501
        Seed of the random pool. Must be non-negative.

    coef_bound : int, optional, default=5
        Random coefficients r, s, t are drawn uniformly from [-coef_bound, coef_bound].

    init_bound : int, optional, default=9
        Random initial terms are drawn uniformly from [-init_bound, init_bound].

    n_lo, n_hi : int, optional, default=0, 40
        Inclusive index range of every check. Identities with a higher index floor start at their floor.

    rel_tol : float, optional, default=1e-8
        Relative tolerance of the floating-point checks. Must be positive.

    abs_tol : float, optional, default=1e-9
        Absolute tolerance of the floating-point checks, used for residuals of near-zero terms. Must be positive.

    identities : sequence of str or "all", optional, default="all"
        Identity ids to run, see ``IDENTITY_IDS``. An empty sequence runs nothing.

    workers : int, optional, default=1
        Number of threads evaluating checks. Must be at least 1.
    """

    presets: tuple[str, ...]
    params: tuple[SequenceParams, ...]
    random_count: int
    seed: int
    coef_bound: int
    init_bound: int
    n_lo: int
    n_hi: int
    rel_tol: float
    abs_tol: float
    identities: tuple[str, ...]
    workers: int

    def __init__(
        self,
        *,
        presets=DEFAULT_PRESETS,
        params=(),
        random_count=25,
        seed=20240501,
        coef_bound=5,
        init_bound=9,
        n_lo=0,
        n_hi=40,
        rel_tol=1e-8,
        abs_tol=1e-9,
        identities="all",
        workers=1,
        validate_on_init: bool = True,
    ):
        self.presets = tuple(presets)
        self.params = tuple(params)
        self.random_count = random_count
        self.seed = seed
        self.coef_bound = coef_bound
        self.init_bound = init_bound
        self.n_lo = n_lo
        self.n_hi = n_hi
        self.rel_tol = rel_tol
        self.abs_tol = abs_tol
        self.identities = IDENTITY_IDS if identities == "all" else tuple(identities)
        self.workers = workers

        if validate_on_init:
            self.validate()

    # ruff counts one branch per field here (C901)
    def validate(self):  # noqa: C901
        for name in ("random_count", "seed", "coef_bound", "init_bound", "n_lo", "n_hi"):
            value = getattr(self, name)
            if not _is_int(value):
                raise TypeError(f"{name} must be an integer. Got {type(value)} instead")
            if value < 0:
                raise ValueError(f"{name} must be a non-negative integer. Got {value} instead")

        if self.n_lo > self.n_hi:
            raise ValueError(f"Invalid index range: n_lo must be <= n_hi. Got ({self.n_lo}, {self.n_hi}) instead")

        for name in ("rel_tol", "abs_tol"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise TypeError(f"{name} must be a number (int or float). Got {type(value)} instead")
            if value <= 0:
                raise ValueError(f"{name} must be positive. Got {value} instead")

        if not _is_int(self.workers):
            raise TypeError(f"workers must be an integer. Got {type(self.workers)} instead")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1. Got {self.workers} instead")

        unknown = [i for i in self.identities if i not in IDENTITY_IDS]
        if unknown:
            raise ValueError(f"Identities = {unknown} not allowed. Allowed values are {list(IDENTITY_IDS)}")

        for text in self.presets:
            if not isinstance(text, str):
                raise TypeError(f"Presets must be given in notation form (str). Got {type(text)} instead")
            # raises ValueError for unknown names or malformed k
            parse_params(text)

        for p in self.params:
            if not isinstance(p, SequenceParams):
                raise TypeError(f"Explicit parameters must be SequenceParams. Got {type(p)} instead")
            if not p.is_exact:
                raise ValueError(f"Explicit parameters must be integers. Got {format_params(p)} instead")

    def to_dict(self) -> dict[str, Any]:
        """Plain-data echo of the configuration, as embedded in command output."""
        return {
            "presets": list(self.presets),
            "params": [format_params(p) for p in self.params],
            "random_count": self.random_count,
            "seed": self.seed,
            "coef_bound": self.coef_bound,
            "init_bound": self.init_bound,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "identities": list(self.identities),
            "workers": self.workers,
        }

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "SuiteConfig":
        """Build a configuration from a mapping with the same keys as ``to_dict``.

        Raises:
            ValueError: If the mapping has unknown keys or invalid values.
        """
        allowed = set(cls().to_dict())
        unknown = sorted(set(data) - allowed)
        if unknown:
            raise ValueError(f"Unknown suite configuration keys {unknown}. Allowed keys are {sorted(allowed)}")

        kwargs = dict(data)
        if "params" in kwargs:
            kwargs["params"] = [parse_params(str(text)) for text in kwargs["params"]]
        if "presets" in kwargs:
            kwargs["presets"] = [str(text) for text in kwargs["presets"]]
        if "identities" in kwargs and kwargs["identities"] != "all":
            kwargs["identities"] = [str(i) for i in kwargs["identities"]]
        for name in ("rel_tol", "abs_tol"):
            # ruamel returns ScalarFloat, which keeps its formatting around
            if isinstance(kwargs.get(name), float):
                kwargs[name] = float(kwargs[name])
        return cls(**kwargs)

    @classmethod
    def from_yaml(cls, text: str) -> "SuiteConfig":
        """Parse a YAML suite description. An empty document gives the default configuration."""
        data = YAML().load(text)
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ValueError(f"A suite configuration must be a YAML mapping. Got {type(data)} instead")
        logger.debug(f"Loaded suite configuration keys: {list(data)}")
        return cls.from_mapping(data)

    @classmethod
    def from_file(cls, path: str | Path) -> "SuiteConfig":
        return cls.from_yaml(Path(path).read_text())
