from __future__ import annotations

import pytest

from arthur_calc import random_instances as ri
from arthur_calc.endoscopy import SemisimpleElement
from arthur_calc.generic_dual import GenericDatum
from arthur_calc.packets import PacketLabel
from arthur_calc.params import validate_for_group


@pytest.mark.parametrize("flavor", ri.FLAVORS)
def test_deterministic(flavor):
    cfg = ri.SuiteConfig(seed=42)
    for i in range(5):
        assert ri.generate_random_instance(cfg, flavor, i) == ri.generate_random_instance(cfg, flavor, i)


def test_anti_tempered_gp_shape():
    cfg = ri.SuiteConfig(seed=1)
    for i in range(50):
        psi, g = ri.generate_random_instance(cfg, "anti_tempered_gp", i)
        part = validate_for_group(psi, g.quasi_split())
        assert psi.is_anti_tempered() and not part.bp and not part.nsd
        parities = {}
        for s in psi:
            assert parities.setdefault(s.rho.label, s.b % 2) == s.b % 2
        assert psi.dim <= cfg.max_dim and len(part.gp) <= cfg.max_gp


def test_other_flavors_are_valid():
    cfg = ri.SuiteConfig(seed=2)
    for i in range(30):
        assert isinstance(ri.generate_random_instance(cfg, "tempered_label", i), PacketLabel)
        assert isinstance(ri.generate_random_instance(cfg, "generic_datum", i), GenericDatum)
        psi, g, s = ri.generate_random_instance(cfg, "element", i)
        assert isinstance(s, SemisimpleElement)
        # rebuilding from the eigenvalue table passes every parity check again
        assert SemisimpleElement.build(s.part, s.as_dict()) == s


def test_config_validation():
    with pytest.raises(ValueError):
        ri.SuiteConfig(bounds=(0, 6, 3, 7, 7))
    with pytest.raises(ValueError):
        ri.generate_random_instance(ri.SuiteConfig(), "nope")


def test_bounds_admitting_nothing():
    cfg = ri.SuiteConfig(bounds=(1, 1, 1, 1, 1))
    psi, g = ri.generate_random_instance(cfg, "anti_tempered_gp")
    assert psi.dim == 1
    # a repeated summand needs dimension at least two
    with pytest.raises(ri.NoInstance):
        ri.anti_tempered_repeated(ri.rng_for(cfg, "x", 0), cfg)
