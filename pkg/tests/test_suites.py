"""The suites pass on the library and catch planted sign errors."""

from __future__ import annotations

import pytest

import arthur_calc.suites as suites
from arthur_calc.dsl import parse
from arthur_calc.random_instances import SuiteConfig

CFG = SuiteConfig(seed=99, count=40)


def test_examples_suite_clean():
    res = suites.examples_suite()
    assert res.ok and res.checked >= 15


@pytest.mark.parametrize("name", sorted(suites.RANDOM_SUITES))
def test_random_suites_clean(name):
    res = suites.RANDOM_SUITES[name](CFG)
    assert res.checked == CFG.count
    assert res.ok, res.violations[:2]


def _flip(value):
    return -value


@pytest.mark.parametrize(
    "suite, target",
    [
        ("lemma61", "lemma61_product"),
        ("mw_character", "mw_character_xu"),
        ("prop74", "prop74_check"),
        ("beta_closed_form", "beta_phi_psi_closed_form"),
        ("beta_discrete_oracle", "beta_oracle_discrete"),
        ("beta_multiplicativity", "beta_GL"),
        ("supercuspidal", "is_supercuspidal"),
    ],
)
def test_planted_bug_is_caught(monkeypatch, suite, target):
    real = getattr(suites, target)

    def broken(*args, **kwargs):
        out = real(*args, **kwargs)
        if isinstance(out, bool):
            return not out
        if isinstance(out, int):
            return -out
        # a character: flip it on the first summand
        vals = list(out.values)
        if vals:
            vals[0] = -vals[0]
        return type(out)(out.keys, tuple(vals))

    monkeypatch.setattr(suites, target, broken)
    res = suites.RANDOM_SUITES[suite](CFG)
    assert not res.ok
    assert res.violations == sorted(res.violations, key=lambda v: (v["reproducer"], v["detail"]))


def test_reproducers_parse(monkeypatch):
    monkeypatch.setattr(suites, "beta_oracle_discrete", lambda phi, g: 0)
    res = suites.beta_discrete_suite(SuiteConfig(seed=1, count=5))
    for v in res.violations:
        g, p = parse(v["reproducer"])
        assert p.is_tempered()
