"""Command-line front end.

Every command builds a report {schema, command, inputs, results, violations}
and renders it as text or JSON.  Exit codes: 0 success, 1 identity
violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional

from .component_group import SignCharacter, characters_for_form, component_info, pair
from .dsl import (
    format_input,
    format_key,
    format_parameter,
    parse,
    parse_eigen,
    parse_generic,
    parse_sign_values,
)
from .endoscopy import (
    SemisimpleElement,
    endoscopic_datum,
    image_in_component_group,
    lemma61_product,
    mw_character_closed,
    mw_character_xu,
)
from .generic_dual import (
    GenericDatum,
    generic_dual_chain,
    generic_dual_L,
    rests_on_working_hypothesis,
    standard_module_shape,
)
from .groups import GroupError, GroupForm, kottwitz_sign, witt_rank
from .packets import PacketLabel, arthur_lemma_comparison, az_dual_label, prop74_check
from .params import FormalParameter, Kind, ParameterError, arthur_to_L, hat, is_relevant, validate_for_group
from .random_instances import SuiteConfig
from .signs import beta_L, beta_phi_psi, beta_phi_psi_closed_form
from .suites import RANDOM_SUITES, examples_suite, run_random

SCHEMA = 1
DEFAULT_COUNT = 500


class UsageError(Exception):
    pass


# serialization -------------------------------------------------------------


def _js(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, FormalParameter):
        return format_parameter(obj)
    if isinstance(obj, GroupForm):
        return str(obj)
    if isinstance(obj, SignCharacter):
        return {format_key(k): v for k, v in obj.items()}
    if isinstance(obj, dict):
        return {str(k): _js(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_js(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    for k, v in value.items():
        if isinstance(v, dict) and v:
            out.append(f"{pad}{k}:")
            out += _text(v, indent + 1)
        elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
            out.append(f"{pad}{k}:")
            for x in v:
                if isinstance(x, dict):
                    lines = _text(x, indent + 2)
                    out.append(f"{pad}  - {lines[0].strip()}")
                    out += lines[1:]
                else:
                    out.append(f"{pad}  - {x}")
        elif isinstance(v, list):
            out.append(f"{pad}{k}: {'; '.join(str(x) for x in v) if v else '(none)'}")
        elif isinstance(v, bool):
            out.append(f"{pad}{k}: {'yes' if v else 'no'}")
        elif isinstance(v, int):
            out.append(f"{pad}{k}: {v:+d}" if k.startswith(("beta", "e(", "eps", "sign", "pair", "endoscopic")) else f"{pad}{k}: {v}")
        else:
            out.append(f"{pad}{k}: {v if v not in ('', None) else '(none)'}")
    return out


def render(report: dict, fmt: str) -> str:
    data = _js(report)
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False)
    lines = [f"== {data['command']} =="]
    lines += _text(data["inputs"])
    lines += _text(data["results"])
    if data["violations"]:
        lines.append(f"VIOLATIONS ({len(data['violations'])}):")
        for v in data["violations"]:
            lines.append(f"  [{v['identity']}] {v['reproducer']}")
            lines.append(f"      {v['detail']}")
    return "\n".join(lines)


def _char_text(eps: SignCharacter) -> str:
    return str(eps)


# commands ------------------------------------------------------------------


def _input(args) -> tuple[GroupForm, FormalParameter]:
    return parse(args.input, Kind(args.kind))


def _label(g: GroupForm, phi: FormalParameter, char: str) -> PacketLabel:
    keys = validate_for_group(phi, g.quasi_split()).gp_keys
    return PacketLabel(phi, SignCharacter(keys, parse_sign_values(char, keys)), g)


def _summary(g: GroupForm, p: FormalParameter) -> dict:
    return {"group": g, "parameter": p}


def cmd_classify(args) -> dict:
    g, p = _input(args)
    part = validate_for_group(p, g.quasi_split())
    classes = [{"summand": format_parameter(FormalParameter((s,), p.kind)), "class": "gp"} for s in part.gp]
    classes += [{"summand": format_parameter(FormalParameter((s,), p.kind)), "class": "bp"} for s in part.bp]
    for s, t in part.nsd:
        both = format_parameter(FormalParameter((s, t), p.kind))
        classes.append({"summand": both, "class": "nsd pair"})
    results = {
        "dimension": p.dim,
        "witt rank": witt_rank(g),
        "e(G)": kottwitz_sign(g),
        "eps_hat": g.eps_hat,
        "tempered": p.is_tempered(),
        "anti-tempered": p.is_anti_tempered(),
        "summands": classes,
        "relevant": is_relevant(p, g),
    }
    if p.kind is Kind.ARTHUR:
        results["phi_psi relevant"] = is_relevant(arthur_to_L(p), g)
    return {"inputs": _summary(g, p), "results": results}


def cmd_component(args) -> dict:
    g, p = _input(args)
    info = component_info(validate_for_group(p, g.quasi_split()), g)
    chars = characters_for_form(info, g)
    return {
        "inputs": _summary(g, p),
        "results": {
            "domain": [format_key(k) for k in info.keys],
            "multiplicities": list(info.mults),
            "order of the component group": info.order_C,
            "e0": _char_text(info.e0),
            "s_psi image": _char_text(info.e_psi),
            "characters": [_char_text(e) for e in chars],
        },
    }


def cmd_signs(args) -> dict:
    g, p = _input(args)
    results: dict[str, Any] = {"r(G)": witt_rank(g), "r(G*)": witt_rank(g.quasi_split()), "e(G)": kottwitz_sign(g)}
    if p.kind is Kind.L:
        results["beta(phi)"] = beta_L(p, g)
    elif p.is_tempered():
        # a tempered phi read both ways: as an L-parameter and through psi = hat(phi)
        results["beta(phi)"] = beta_L(p.as_kind(Kind.L), g)
        results["psi"] = hat(p)
        results["beta(phi_psi)"] = beta_phi_psi(hat(p), g)
    else:
        results["beta(phi_psi)"] = beta_phi_psi(p, g)
        if p.is_anti_tempered():
            results["beta(phi_psi) closed form"] = beta_phi_psi_closed_form(p, g)
    violations = []
    if results.get("beta(phi_psi) closed form", results.get("beta(phi_psi)")) != results.get("beta(phi_psi)"):
        violations.append(_violation("closed form of beta(phi_psi) = definition", format_input(g, p), "mismatch"))
    return {"inputs": _summary(g, p), "results": results, "violations": violations}


def _hints(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs or []:
        name, _, form = item.partition("=")
        if not form:
            raise UsageError(f"--hint expects name=form, got {item!r}")
        out[name.strip()] = form.strip()
    return out


def cmd_endoscopy(args) -> dict:
    g, psi = _input(args)
    part = validate_for_group(psi, g.quasi_split())
    s = SemisimpleElement.build(part, parse_eigen(args.element))
    hints = _hints(args.hint)
    datum = endoscopic_datum(psi, g, s, hints)
    x = image_in_component_group(s)
    results: dict[str, Any] = {}
    for name, (h, p) in (("plus", datum.plus), ("minus", datum.minus)):
        results[name] = {"group": h if h is not None else "trivial", "parameter": p}
    results["GL factors"] = [{"eigenvalue": lam, "parameter": p, "rank": p.dim} for lam, p in datum.gl_factors]
    results["notes"] = list(datum.twist_note)
    results["image of s"] = _char_text(x)
    violations = []
    if psi.is_anti_tempered():
        prod = lemma61_product(psi, g, s, hints)
        target = pair(mw_character_closed(psi, g), x)
        results["endoscopic sign product"] = prod
        results["pairing <eps^MW, image(s)>"] = target
        if prod != target:
            violations.append(_violation("endoscopic sign identity", f"{format_input(g, psi)} --element {args.element!r}", "product differs from pairing"))
    inputs = _summary(g, psi)
    inputs["element"] = args.element
    return {"inputs": inputs, "results": results, "violations": violations}


def cmd_mw(args) -> dict:
    g, psi = _input(args)
    closed = mw_character_closed(psi, g)
    xu = mw_character_xu(psi, g)
    violations = []
    if closed != xu:
        violations.append(_violation("Xu's recipe = closed form", format_input(g, psi), f"{closed} vs {xu}"))
    return {
        "inputs": _summary(g, psi),
        "results": {
            "domain": [format_key(k) for k in closed.keys],
            "closed form": _char_text(closed),
            "Xu's recipe": _char_text(xu),
            "agree": closed == xu,
        },
        "violations": violations,
    }


def cmd_dual(args) -> dict:
    g, phi = _input(args)
    l = _label(g, phi, args.char)
    inputs = {**_summary(g, phi), "character": _char_text(l.eps)}
    try:
        psi, eps = az_dual_label(l)
    except AssertionError as exc:
        return {
            "inputs": inputs,
            "results": {},
            "violations": [_violation("Prop 7.4 sign identity", f"{format_input(g, phi)} --char {args.char!r}", str(exc))],
        }
    return {
        "inputs": inputs,
        "results": {
            "dual parameter": psi,
            "domain": [format_key(k) for k in eps.keys],
            "dual character": _char_text(eps),
            "sign identity": prop74_check(l),
        },
    }


def cmd_compare(args) -> dict:
    g, phi = _input(args)
    l = _label(g, phi, args.char)
    rep = arthur_lemma_comparison(l)
    violations = []
    if not rep.corrected_sign_holds:
        violations.append(_violation("corrected sign identity", f"{format_input(g, phi)} --char {args.char!r}", "fails"))
    return {
        "inputs": {**_summary(g, phi), "character": _char_text(l.eps)},
        "results": {
            "psi": rep.psi,
            "beta(phi)": rep.beta_phi,
            "beta(phi_psi)": rep.beta_phi_psi,
            "beta(pi)": rep.beta_pi,
            "eps(s_psi)": rep.eps_at_s_psi,
            "naive character": _char_text(rep.original_character),
            "corrected character": _char_text(rep.corrected_character),
            "character agrees": rep.character_agrees,
            "naive sign identity holds": rep.original_sign_holds,
            "corrected sign identity holds": rep.corrected_sign_holds,
            "verdict": rep.verdict,
        },
        "violations": violations,
    }


def cmd_generic_dual(args) -> dict:
    g, gl, temp = parse_generic(args.input)
    d = GenericDatum.build(g, gl, temp)
    out = generic_dual_L(d)
    shape = standard_module_shape(temp)
    chain = generic_dual_chain(temp)
    results = {
        "phi of the generic representation": d.phi(),
        "dual L-parameter": out,
        "standard module (tempered part)": {
            "twists": [f"{rho.label}|{e}^{m}" if m > 1 else f"{rho.label}|{e}" for rho, e, m in shape.twists],
            "anchor": shape.anchor,
        },
        "chain (tempered part)": {
            "peels": [f"{p.rho.label}|{p.exponent} x{p.m} (S_{p.A})" for p in chain.peels],
            "terminal": chain.terminal,
        },
        "rests on a working hypothesis": rests_on_working_hypothesis(g),
    }
    violations = []
    if chain.twist_multiset() != shape.twist_multiset():
        violations.append(_violation("chain twists = standard-module twists", args.input, "multisets differ"))
    inputs = {"group": g, "GL parts": list(gl), "tempered part": temp}
    return {"inputs": inputs, "results": results, "violations": violations}


def cmd_verify(args) -> dict:
    if args.suite == "examples":
        results = [examples_suite()]
        inputs: dict[str, Any] = {"suite": "examples"}
    else:
        cfg = SuiteConfig(seed=args.seed_value, count=args.count_value)
        names = args.only or None
        if names and set(names) - set(RANDOM_SUITES):
            raise UsageError(f"unknown suite(s): {', '.join(sorted(set(names) - set(RANDOM_SUITES)))}")
        results = run_random(cfg, names)
        inputs = {"suite": "random", "seed": cfg.seed, "count": cfg.count}
    violations = sorted((v for r in results for v in r.violations), key=lambda v: (v["reproducer"], v["detail"]))
    return {
        "inputs": inputs,
        "results": {
            "suites": [
                {"name": r.name, "identity": r.identity, "checked": r.checked, "violations": len(r.violations)}
                for r in results
            ]
        },
        "violations": violations,
    }


def _violation(identity: str, reproducer: str, detail: str) -> dict:
    return {"identity": identity, "reproducer": reproducer, "detail": detail}


# parser --------------------------------------------------------------------


COMMANDS = {
    "classify": (cmd_classify, "classify summands as gp / bp / nsd and report relevance"),
    "component": (cmd_component, "component group data and the characters of the packet"),
    "signs": (cmd_signs, "Witt rank, Kottwitz sign and beta signs"),
    "endoscopy": (cmd_endoscopy, "endoscopic datum of a semisimple element and its endoscopic sign"),
    "mw-character": (cmd_mw, "the character eps^{M/MW} by both definitions"),
    "dual": (cmd_dual, "Aubert-Zelevinsky dual of a tempered label"),
    "generic-dual": (cmd_generic_dual, "L-parameter of the dual of a generic representation"),
    "compare-arthur": (cmd_compare, "naive character/sign transport against the corrected rule"),
    "verify": (cmd_verify, "replay the worked examples or run the randomized suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--count", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="arthur-calc", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if name == "verify":
            sp.add_argument("--suite", choices=("examples", "random"), required=True)
            sp.add_argument("--only", nargs="+", metavar="SUITE", help=f"subset of: {', '.join(RANDOM_SUITES)}")
            continue
        sp.add_argument("input", help="'group: parameter' in the text syntax")
        if name in ("classify", "component", "signs"):
            sp.add_argument("--kind", choices=("arthur", "L"), default="arthur")
        else:
            sp.set_defaults(kind="arthur")
        if name == "endoscopy":
            sp.add_argument("--element", required=True, help="eigenvalue data, e.g. 'chi@S(1)xS(1): +1^1 -1^1'")
            sp.add_argument("--hint", action="append", metavar="NAME=FORM", help="split or qs for an even orthogonal factor")
        if name in ("dual", "compare-arthur"):
            sp.add_argument("--char", required=True, help="signs on the good-parity summands, e.g. '+,-'")
    return parser


def _resolve(args) -> None:
    args.format = getattr(args, "format", "text")
    seed = getattr(args, "seed", None)
    if seed is None:
        env = os.environ.get("ARTHUR_CALC_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"ARTHUR_CALC_SEED is not an integer: {env!r}") from None
    args.seed_value = seed
    args.count_value = getattr(args, "count", DEFAULT_COUNT)
    if args.count_value < 0:
        raise UsageError("--count must be nonnegative")


INPUT_ERRORS = (UsageError, ParameterError, GroupError, ValueError)


def run(argv: list[str]) -> tuple[int, str]:
    """Exit code and rendered output; argparse usage errors raise SystemExit(2)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve(args)
        report = COMMANDS[args.command][0](args)
    except INPUT_ERRORS as exc:
        return 2, f"{parser.prog} {args.command}: error: {exc}"
    full = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": report["inputs"],
        "results": report["results"],
        "violations": report.get("violations", []),
    }
    return (1 if full["violations"] else 0), render(full, getattr(args, "format", "text"))


def main(argv: Optional[list[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
