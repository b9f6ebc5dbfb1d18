"""
SO(3): beta(phi) is the wrong sign to use
=========================================

phi = 1 x S_2 on split SO(3) is the parameter of a generic, non-supercuspidal
representation.  Its dual parameter is psi = 1 x S_1 x S_2.  Comparing
beta(phi) with beta(phi_psi) shows which one makes the sign identity hold.
"""

from __future__ import annotations

from arthur_calc import (
    Kind,
    PacketLabel,
    arthur_to_L,
    beta_L,
    beta_phi_psi,
    beta_rep,
    hat,
    parse,
    prop74_check,
    reduction_chain,
)
from arthur_calc.signs import beta_oracle_discrete

# -- 1. the label and its reduction chain -----------------------------------
g, phi = parse("SO(3,split): one[1,O]@S(2)xS(1)")
label = PacketLabel.trivial(phi, g)
for step in reduction_chain(label):
    print(f"reduction ({step.case_tag}): GL sign {step.gl_sign:+d}, rank used {step.rank_consumed}")
print("beta(pi):", beta_rep(label))

# -- 2. two candidate signs -------------------------------------------------
psi = hat(phi)
print("beta(phi)     =", beta_L(phi.as_kind(Kind.L), g))
print("phi_psi       =", arthur_to_L(psi))
print("beta(phi_psi) =", beta_phi_psi(psi, g))
print("Levi-block count agrees:", beta_oracle_discrete(phi, g) == beta_phi_psi(psi, g))

# -- 3. only beta(phi_psi) balances the identity ----------------------------
print("eps(s_psi) beta(phi_psi) beta(pi) =", prop74_check(label))
