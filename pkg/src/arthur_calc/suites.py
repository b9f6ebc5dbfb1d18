"""Randomized property suites and the worked-example regression corpus.

Every suite names the identity it checks; each violation carries a
reproducer in DSL syntax, and violations are reported sorted by it.
"""

from __future__ import annotations

import traceback
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import random_instances as ri
from .component_group import SignCharacter, component_info, eval_at_s_psi, pair
from .dsl import format_eigen, format_generic, format_input, parse, parse_sign_values
from .endoscopy import image_in_component_group, lemma61_product, mw_character_closed, mw_character_xu
from .generic_dual import (
    GenericDatum,
    generic_dual_chain,
    generic_dual_L,
    phi0_phi1_split,
    standard_module_shape,
)
from .groups import GroupForm
from .packets import (
    PacketLabel,
    arthur_lemma_comparison,
    az_dual_label,
    beta_rep,
    is_supercuspidal,
    prop74_check,
    reduction_step,
)
from .params import FormalParameter, arthur_to_L, hat, is_relevant, validate_for_group
from .signs import beta_GL, beta_L, beta_oracle_discrete, beta_phi_psi, beta_phi_psi_closed_form


@dataclass
class SuiteResult:
    name: str
    identity: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, reproducer: str, detail: str, identity: str | None = None) -> None:
        self.violations.append({"identity": identity or self.identity, "reproducer": reproducer, "detail": detail})

    def finish(self) -> SuiteResult:
        self.violations.sort(key=lambda v: (v["reproducer"], v["detail"]))
        return self


def _label_repr(l: PacketLabel) -> str:
    return f'{format_input(l.form, l.phi)} --char "{l.eps}"'


def _run(result: SuiteResult, cfg: ri.SuiteConfig, body: Callable) -> SuiteResult:
    for i in range(cfg.count):
        rng = ri.rng_for(cfg, result.name, i)
        repro = [f"<instance {i}>"]
        try:
            body(rng, repro)
        except AssertionError as exc:
            result.fail(repro[0], f"assertion: {exc}")
        except Exception as exc:  # any crash on a valid instance is a failure
            result.fail(repro[0], f"{type(exc).__name__}: {exc} | {traceback.format_exc(limit=1).strip()}")
        result.checked += 1
    return result.finish()


# suites --------------------------------------------------------------------


def lemma61_suite(cfg: ri.SuiteConfig, ngp: bool = False) -> SuiteResult:
    res = SuiteResult(
        "lemma61_ngp" if ngp else "lemma61",
        "e(G) alpha(G,G') beta(phi_psi) beta(phi_psi') = <eps^MW, image(s)> for every preimage s and split hint",
    )

    def body(rng, repro):
        psi, g = ri.anti_tempered(rng, cfg, ngp=ngp)
        part = validate_for_group(psi, g.quasi_split())
        s = ri.random_element(rng, part)
        x = image_in_component_group(s)
        repro[0] = f'{format_input(g, psi)} --element "{format_eigen(s.as_dict())}"'
        target = pair(mw_character_closed(psi, g), x)
        s2 = ri.random_element(rng, part, image=x)
        if image_in_component_group(s2) != x:
            raise AssertionError("preimage generator missed the image")
        for t in (s, s2):
            got = lemma61_product(psi, g, t)  # also compares every split-hint choice
            if got != target:
                res.fail(
                    f'{format_input(g, psi)} --element "{format_eigen(t.as_dict())}"',
                    f"product {got:+d}, pairing {target:+d}",
                )
        res.stats["non-trivial image"] += not x.is_trivial()

    return _run(res, cfg, body)


MW_MEMBERSHIP = "<eps^MW, e0> = +1, eps^MW(s_psi) = +1, eps^MW = +1 on even b"


def mw_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult(
        "mw_character",
        "Xu's recipe under two admissible orders = closed form (and membership, reported separately)",
    )

    def body(rng, repro):
        # only copies of one summand may be reordered, so ask for a repeated summand
        psi, g = ri.anti_tempered_repeated(rng, cfg)
        repro[0] = format_input(g, psi)
        part = validate_for_group(psi, g.quasi_split())
        info = component_info(part, g)
        closed = mw_character_closed(psi, g)
        first = mw_character_xu(psi, g)
        order = ri.distinct_admissible_order(rng, part)
        second = mw_character_xu(psi, g, order)
        if not (closed == first == second):
            res.fail(repro[0], f"closed {closed}, xu {first}, xu (other order) {second}")
        if pair(closed, info.e0) != 1:
            res.fail(repro[0], "pairing with e0 is -1", MW_MEMBERSHIP)
        if eval_at_s_psi(closed, info) != 1:
            res.fail(repro[0], "value at s_psi is -1", MW_MEMBERSHIP)
        if any(closed[s.key] != 1 for s in part.gp if s.b % 2 == 0):
            res.fail(repro[0], "nontrivial on an even-b summand", MW_MEMBERSHIP)

    return _run(res, cfg, body)


def prop74_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("prop74", "eps(s_psi) beta(phi_psi) beta(pi(phi,eps)) = +1, for either reduction order")

    def body(rng, repro):
        l = ri.random_label(rng, cfg)
        repro[0] = _label_repr(l)
        v = prop74_check(l)
        if v != 1:
            res.fail(repro[0], f"product is {v:+d}")
        if beta_rep(l) != beta_rep(l, reverse=True):
            res.fail(repro[0], "beta(pi) depends on the order of reductions")
        step = reduction_step(l)
        res.stats[f"first step {step.case_tag if step else 'none'}"] += 1
        res.stats[f"form {l.form.form.value}"] += 1

    return _run(res, cfg, body)


def beta_closed_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("beta_closed_form", "closed form of beta(phi_psi) = definition, anti-tempered psi")

    def body(rng, repro):
        psi, g = ri.anti_tempered(rng, cfg, ngp=True)
        repro[0] = format_input(g, psi)
        a, b = beta_phi_psi_closed_form(psi, g), beta_phi_psi(psi, g)
        if a != b:
            res.fail(repro[0], f"closed {a:+d}, definition {b:+d}")

    return _run(res, cfg, body)


def beta_discrete_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("beta_discrete_oracle", "Levi-block count = beta(phi_psi) for psi = hat(phi), phi discrete")

    def body(rng, repro):
        phi, g = ri.tempered(rng, cfg, discrete=True)
        repro[0] = format_input(g, phi)
        a, b = beta_oracle_discrete(phi, g), beta_phi_psi(hat(phi), g)
        if a != b:
            res.fail(repro[0], f"oracle {a:+d}, definition {b:+d}")

    return _run(res, cfg, body)


def supercuspidal_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("supercuspidal", "alternating criterion holds iff no reduction applies")

    def body(rng, repro):
        l = ri.random_label(rng, cfg, discrete=rng.random() < 0.8)
        repro[0] = _label_repr(l)
        sc, step = is_supercuspidal(l), reduction_step(l)
        if sc != (step is None):
            res.fail(repro[0], f"criterion {sc}, first reduction {step and step.case_tag}")
        res.stats["supercuspidal"] += sc

    return _run(res, cfg, body)


def multiplicativity_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("beta_multiplicativity", "beta(phi) = beta(phi0) beta_GL(phi1) for phi = phi0 + phi1 + dual(phi1)")

    def body(rng, repro):
        p, g, p0, g0, p1 = ri.random_L_split(rng, cfg)
        repro[0] = f"{format_input(g, p)} = {format_input(g0, p0)} + GL: {format_input(g, p1).split(': ', 1)[1]}"
        a, b = beta_L(p, g), beta_L(p0, g0) * beta_GL(p1)
        if a != b:
            res.fail(repro[0], f"whole {a:+d}, product {b:+d}")

    return _run(res, cfg, body)


def generic_dual_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult(
        "generic_dual",
        "dual parameter has trivial Deligne SL2; phi0/phi1 reassembly = arthur_to_L(hat(phi)); chain twists = standard-module twists",
    )

    def body(rng, repro):
        phi, g = ri.tempered(rng, cfg, quasi_split=True)
        repro[0] = format_input(g, phi)
        d = GenericDatum.build(g, [], phi)
        out = generic_dual_L(d)
        if any(s.a != 1 for s in out):
            res.fail(repro[0], "nontrivial Deligne SL2 in the output")
        shape = standard_module_shape(phi)
        phi0, phi1 = phi0_phi1_split(phi)
        target = arthur_to_L(hat(phi))
        if phi0 + phi1 + phi1.dual() != target or shape.reassemble() != target or out != target:
            res.fail(repro[0], "reassembly differs from arthur_to_L(hat(phi))")
        chain = generic_dual_chain(phi)
        if chain.twist_multiset() != shape.twist_multiset():
            res.fail(repro[0], f"chain twists {dict(chain.twist_multiset())} vs {dict(shape.twist_multiset())}")

    return _run(res, cfg, body)


def generic_datum_suite(cfg: ri.SuiteConfig) -> SuiteResult:
    res = SuiteResult("generic_datum", "dual of a generic datum is a valid L-parameter of the same dimension")

    def body(rng, repro):
        d = ri.random_generic(rng, cfg)
        repro[0] = format_generic(d.form, d.gl_parts, d.temp_part.phi)
        out = generic_dual_L(d)
        if out.dim != d.phi().dim:
            res.fail(repro[0], f"dimension {out.dim} vs {d.phi().dim}")

    return _run(res, cfg, body)


RANDOM_SUITES: dict[str, Callable[[ri.SuiteConfig], SuiteResult]] = {
    "lemma61": lemma61_suite,
    "lemma61_ngp": lambda cfg: lemma61_suite(cfg, ngp=True),
    "mw_character": mw_suite,
    "prop74": prop74_suite,
    "beta_closed_form": beta_closed_suite,
    "beta_discrete_oracle": beta_discrete_suite,
    "supercuspidal": supercuspidal_suite,
    "beta_multiplicativity": multiplicativity_suite,
    "generic_dual": generic_dual_suite,
    "generic_datum": generic_datum_suite,
}


def run_random(cfg: ri.SuiteConfig, names=None) -> list[SuiteResult]:
    return [RANDOM_SUITES[n](cfg) for n in (names or RANDOM_SUITES)]


# worked examples -------------------------------------------------------------

SP2_EXAMPLE = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)"
SO3_EXAMPLE = "SO(3,split): one[1,O]@S(2)xS(1)"
SO7_EXAMPLE = "SO(7,inner): one[1,O]@S(1)xS(2)^3"


def _expect(res: SuiteResult, where: str, what: str, got, want) -> None:
    res.checked += 1
    if got != want:
        res.fail(where, f"{what}: got {got}, expected {want}")


def examples_suite() -> SuiteResult:
    res = SuiteResult("examples", "the two worked counterexamples and the relevance vector")

    g, phi = parse(SP2_EXAMPLE)
    l = PacketLabel(phi, SignCharacter(phi_keys(phi, g), parse_sign_values("+,+", phi_keys(phi, g))), g)
    where = f'{SP2_EXAMPLE} --char "+,+"'
    rep = arthur_lemma_comparison(l)
    psi = hat(phi)
    info = component_info(validate_for_group(psi, g), g)
    _expect(res, where, "beta(phi)", rep.beta_phi, 1)
    _expect(res, where, "beta(pi)", rep.beta_pi, 1)
    _expect(res, where, "s_psi image trivial", info.e_psi.is_trivial(), True)
    mw = mw_character_closed(psi, g)
    chi_key = next(k for k in mw.keys if k.label == "chi")
    _expect(res, where, "eps^MW(chi)", mw[chi_key], -1)
    _expect(res, where, "Xu's recipe agrees", mw_character_xu(psi, g), mw)
    _expect(res, where, "verdict", rep.verdict, "CONTRADICTION")
    _expect(res, where, "dual character", str(az_dual_label(l)[1]), "-,+")

    g, phi = parse(SO3_EXAMPLE)
    l = PacketLabel.trivial(phi, g)
    where = f'{SO3_EXAMPLE} --char "+"'
    rep = arthur_lemma_comparison(l)
    psi = hat(phi)
    _expect(res, where, "beta(phi)", rep.beta_phi, -1)
    _expect(res, where, "beta(phi_psi)", rep.beta_phi_psi, 1)
    _expect(res, where, "eps^MW trivial", mw_character_closed(psi, g).is_trivial(), True)
    _expect(res, where, "verdict", rep.verdict, "CONTRADICTION")
    _expect(res, where, "original sign identity", rep.original_sign_holds, False)
    _expect(res, where, "eps(s_psi), beta(pi)", (rep.eps_at_s_psi, rep.beta_pi), (1, 1))
    _expect(res, where, "corrected sign identity", prop74_check(l), 1)

    g, psi = parse(SO7_EXAMPLE)
    _expect(res, SO7_EXAMPLE, "psi relevant", is_relevant(psi, g), True)
    _expect(res, SO7_EXAMPLE, "phi_psi relevant", is_relevant(arthur_to_L(psi), g), False)
    return res.finish()


def phi_keys(phi: FormalParameter, g: GroupForm):
    return validate_for_group(phi, g.quasi_split()).gp_keys


__all__ = [
    "RANDOM_SUITES",
    "SuiteResult",
    "examples_suite",
    "run_random",
]
