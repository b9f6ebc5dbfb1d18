"""
Sp(2): the character is not carried over unchanged
==================================================

Take phi = chi + chi + 1 on Sp(2), with chi the nontrivial quadratic
character.  Its packet has two members, pi+ (trivial character) and pi-.
We transport the label of pi+ across the Aubert-Zelevinsky involution and
compare the naive rule (keep the character) against the corrected one.
"""

from __future__ import annotations

from arthur_calc import (
    PacketLabel,
    arthur_lemma_comparison,
    az_dual_label,
    beta_rep,
    characters_for_form,
    component_info,
    hat,
    mw_character_closed,
    mw_character_xu,
    parse,
    validate_for_group,
)

# -- 1. the parameter and its packet ----------------------------------------
g, phi = parse("Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)")
info = component_info(validate_for_group(phi, g), g)
print("packet characters:", [str(e) for e in characters_for_form(info, g)])

# -- 2. the dual parameter is phi itself (every a and b is one) --------------
psi = hat(phi)
print("psi = hat(phi):", psi, "| equal to phi:", psi == phi)
print("image of s_psi trivial:", info.e_psi.is_trivial())

# -- 3. the correcting character, by two independent routes -----------------
print("eps^MW closed form:", mw_character_closed(psi, g))
print("eps^MW Xu's recipe:", mw_character_xu(psi, g))

# -- 4. beta of pi+ and the dual label --------------------------------------
plus = PacketLabel.trivial(phi, g)
print("beta(pi+):", beta_rep(plus))
dual_psi, dual_eps = az_dual_label(plus)
print("dual label:", dual_psi, "with character", dual_eps, "(this is pi-)")

# -- 5. the naive rule disagrees --------------------------------------------
rep = arthur_lemma_comparison(plus)
print("naive character:", rep.original_character, "| corrected:", rep.corrected_character)
print("verdict:", rep.verdict)
