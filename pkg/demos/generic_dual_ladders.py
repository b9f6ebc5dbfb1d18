"""
Dual of a generic representation, three ways
=============================================

For a good-parity tempered phi, the dual of the generic member has
L-parameter arthur_to_L(hat(phi)).  We rebuild it from the phi_0 / phi_1
split, from the standard-module shape, and compare twists against the
peeling chain.
"""

from __future__ import annotations

from arthur_calc import (
    GenericDatum,
    arthur_to_L,
    generic_dual_chain,
    generic_dual_L,
    hat,
    parse,
    phi0_phi1_split,
    standard_module_shape,
)
from arthur_calc.dsl import parse_generic

g, phi = parse("Sp(14): r[1,O]@S(3)xS(1)^2 + r[1,O]@S(5)xS(1) + t[2,S]@S(2)xS(1)")
print("phi:", phi, "on", g)

out = generic_dual_L(GenericDatum.build(g, [], phi))
print("dual parameter:", out)

phi0, phi1 = phi0_phi1_split(phi)
print("phi_0:", phi0 or "(empty)")
print("phi_1:", phi1)
print("phi_0 + phi_1 + phi_1^vee = arthur_to_L(hat(phi)):", phi0 + phi1 + phi1.dual() == arthur_to_L(hat(phi)))

shape = standard_module_shape(phi)
chain = generic_dual_chain(phi)
print("standard-module twists:", sorted(shape.twist_multiset().items()))
print("chain twists          :", sorted(chain.twist_multiset().items()))
for p in chain.peels:
    print(f"  peel {p.rho.label}|.|^{p.exponent} (x{p.m}) from S_{p.A}")
print("terminal:", chain.terminal or "(empty)")

# -- a datum with a GL piece ------------------------------------------------
g, gl, temp = parse_generic("Sp(4): s[1,N]|1/2@S(2)xS(1) ; one[1,O]@S(1)xS(1)")
d = GenericDatum.build(g, gl, temp)
print()
print("generic phi:", d.phi())
print("its dual   :", generic_dual_L(d))
