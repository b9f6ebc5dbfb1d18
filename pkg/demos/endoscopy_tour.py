"""
Endoscopic data and the sign of a component-group element
=========================================================

For an anti-tempered psi and a semisimple s in its centralizer, the ratio of
beta signs across the endoscopic datum cut out by s equals the pairing of
eps^MW with the image of s.  Two elements with the same image give the same
sign, and so does every choice of split or quasi-split even orthogonal factor.
"""

from __future__ import annotations

from itertools import product

from arthur_calc import (
    SemisimpleElement,
    endoscopic_datum,
    image_in_component_group,
    lemma61_product,
    mw_character_closed,
    pair,
    parse,
    validate_for_group,
)
from arthur_calc.dsl import parse_eigen

g, psi = parse("Sp(8): a[1,O]@S(1)xS(1)^3 + b[1,O]@S(1)xS(3)^2")
part = validate_for_group(psi, g)
eps = mw_character_closed(psi, g)
print("psi:", psi, "on", g)
print("eps^MW:", eps)

# -- elements with the same image: swap a (+1,+1) pair for (L, L^-1) --------
for text in ("a@S(1)xS(1): -1^1 +1^2", "a@S(1)xS(1): -1^1 L^1 Linv^1"):
    s = SemisimpleElement.build(part, parse_eigen(text))
    d = endoscopic_datum(psi, g, s)
    print()
    print("s:", text)
    print("  plus :", d.plus[0], d.plus[1])
    print("  minus:", d.minus[0], d.minus[1])
    print("  GL   :", [(lam, str(p)) for lam, p in d.gl_factors])
    x = image_in_component_group(s)
    values = {
        hints: lemma61_product(psi, g, s, dict(zip(d.even_orthogonal(), hints)))
        for hints in product(("split", "qs"), repeat=len(d.even_orthogonal()))
    }
    print("  products over split hints:", values)
    print("  pairing <eps^MW, x>      :", pair(eps, x))
