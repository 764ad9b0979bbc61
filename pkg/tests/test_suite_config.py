# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

import pytest

from gentrib.seq_core import make_params, real_params
from gentrib.suite_config import DEFAULT_PRESETS, IDENTITY_IDS, SuiteConfig


def test_defaults():
    cfg = SuiteConfig()
    assert cfg.presets == DEFAULT_PRESETS, f"Expected {DEFAULT_PRESETS}, got {cfg.presets}"
    assert cfg.identities == IDENTITY_IDS
    assert cfg.params == ()
    assert cfg.random_count == 25
    assert (cfg.n_lo, cfg.n_hi) == (0, 40)
    assert cfg.rel_tol == 1e-8
    assert cfg.workers == 1


def test_validate():
    with pytest.raises(ValueError):
        SuiteConfig(n_lo=10, n_hi=5)
    with pytest.raises(ValueError):
        SuiteConfig(random_count=-1)
    with pytest.raises(TypeError):
        SuiteConfig(seed=1.5)
    with pytest.raises(TypeError):
        SuiteConfig(n_hi=True)
    with pytest.raises(ValueError):
        SuiteConfig(rel_tol=0)
    with pytest.raises(TypeError):
        SuiteConfig(abs_tol="1e-9")
    with pytest.raises(ValueError):
        SuiteConfig(workers=0)
    with pytest.raises(ValueError):
        SuiteConfig(identities=["cassini_u", "cassini_w"])
    with pytest.raises(ValueError):
        SuiteConfig(presets=["fibonacci"])
    with pytest.raises(TypeError):
        SuiteConfig(params=[(0, 0, 1, 1, 1, 1)])
    with pytest.raises(ValueError):
        SuiteConfig(params=[real_params(0, 0, 1, 0.5, 1, 1)])

    # validation can be deferred
    cfg = SuiteConfig(n_lo=10, n_hi=5, validate_on_init=False)
    cfg.n_hi = 20
    cfg.validate()

    assert SuiteConfig(identities=[]).identities == ()


def test_to_dict():
    cfg = SuiteConfig(params=[make_params(5, -2, 3, 1, 2, 1)], identities=["cassini_u"], random_count=0)
    data = cfg.to_dict()
    assert data["params"] == ["V(5,-2,3;1,2,1)"], f"Got {data['params']}"
    assert data["identities"] == ["cassini_u"]
    assert data["random_count"] == 0
    assert SuiteConfig.from_mapping(data).to_dict() == data


def test_from_yaml():
    text = """
presets: [tribonacci, "narayana:2"]
params: ["V(5,-2,3;1,2,1)"]
random_count: 3
seed: 7
n_hi: 60
rel_tol: 1.0e-6
identities: [cassini_u, binet_v]
"""
    cfg = SuiteConfig.from_yaml(text)
    assert cfg.presets == ("tribonacci", "narayana:2"), f"Got {cfg.presets}"
    assert cfg.params == (make_params(5, -2, 3, 1, 2, 1),)
    assert (cfg.random_count, cfg.seed, cfg.n_hi) == (3, 7, 60)
    assert cfg.rel_tol == 1e-6
    assert type(cfg.rel_tol) is float
    assert cfg.identities == ("cassini_u", "binet_v")

    cfg = SuiteConfig.from_yaml("identities: all\n")
    assert cfg.identities == IDENTITY_IDS

    assert SuiteConfig.from_yaml("").to_dict() == SuiteConfig().to_dict()

    with pytest.raises(ValueError):
        SuiteConfig.from_yaml("n_max: 10\n")
    with pytest.raises(ValueError):
        SuiteConfig.from_yaml("- tribonacci\n- padovan\n")
    with pytest.raises(ValueError):
        SuiteConfig.from_yaml('params: ["V(0,0;1,1,1)"]\n')


def test_from_file(tmp_path):
    path = tmp_path / "suite.yaml"
    path.write_text("random_count: 0\nn_lo: 2\nn_hi: 12\nworkers: 2\n")
    cfg = SuiteConfig.from_file(path)
    assert (cfg.random_count, cfg.n_lo, cfg.n_hi, cfg.workers) == (0, 2, 12, 2)
