"""Exact sign and label calculus for local Arthur parameters of classical groups."""

from .component_group import (
    ComponentGroupInfo,
    SignCharacter,
    canonical_character,
    characters_for_form,
    component_info,
    eval_at_s_psi,
    pair,
    restrict_to_L_packet_domain,
)
from .dsl import ParseError, format_input, format_parameter, parse, parse_group, parse_parameter
from .endoscopy import (
    EndoscopicDatum,
    SemisimpleElement,
    endoscopic_datum,
    image_in_component_group,
    lemma61_product,
    mw_character_closed,
    mw_character_xu,
)
from .generic_dual import (
    GenericDatum,
    StandardModuleShape,
    generic_dual_chain,
    generic_dual_L,
    phi0_phi1_split,
    standard_module_shape,
)
from .groups import Family, Form, GroupError, GroupForm, chi_v, kottwitz_sign, witt_rank
from .packets import (
    PacketLabel,
    ReductionStep,
    UnrealizableLabel,
    arthur_lemma_comparison,
    az_dual_label,
    beta_rep,
    is_supercuspidal,
    prop74_check,
    reduction_chain,
    reduction_step,
)
from .params import (
    FormalParameter,
    GpPartition,
    Irrep,
    Kind,
    ParameterError,
    SdClass,
    Summand,
    SummandKey,
    arthur_to_L,
    hat,
    is_relevant,
    validate_for_group,
)
from .signs import (
    GLFactor,
    alpha,
    beta_GL,
    beta_L,
    beta_oracle_discrete,
    beta_phi_psi,
    beta_phi_psi_closed_form,
    beta_phi_psi_on_form,
    sign_ledger,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentGroupInfo",
    "EndoscopicDatum",
    "Family",
    "Form",
    "FormalParameter",
    "GLFactor",
    "GenericDatum",
    "GpPartition",
    "GroupError",
    "GroupForm",
    "Irrep",
    "Kind",
    "PacketLabel",
    "ParameterError",
    "ParseError",
    "ReductionStep",
    "SdClass",
    "SemisimpleElement",
    "SignCharacter",
    "StandardModuleShape",
    "Summand",
    "SummandKey",
    "UnrealizableLabel",
    "alpha",
    "arthur_lemma_comparison",
    "arthur_to_L",
    "az_dual_label",
    "beta_GL",
    "beta_L",
    "beta_oracle_discrete",
    "beta_phi_psi",
    "beta_phi_psi_closed_form",
    "beta_phi_psi_on_form",
    "beta_rep",
    "canonical_character",
    "characters_for_form",
    "chi_v",
    "component_info",
    "endoscopic_datum",
    "eval_at_s_psi",
    "format_input",
    "format_parameter",
    "generic_dual_L",
    "generic_dual_chain",
    "hat",
    "image_in_component_group",
    "is_relevant",
    "is_supercuspidal",
    "kottwitz_sign",
    "lemma61_product",
    "mw_character_closed",
    "mw_character_xu",
    "pair",
    "parse",
    "parse_group",
    "parse_parameter",
    "phi0_phi1_split",
    "prop74_check",
    "reduction_chain",
    "reduction_step",
    "restrict_to_L_packet_domain",
    "sign_ledger",
    "standard_module_shape",
    "validate_for_group",
    "witt_rank",
]
