"""Quotient branching laws for p-adic general linear groups, decided combinatorially."""

from .core import (
    EMPTY,
    GL0,
    CuspidalLabel,
    CuspidalPoint,
    IrrRep,
    Multisegment,
    Segment,
    is_generic,
    linked,
    precedes,
    theta,
    zelevinsky_involution,
)
from .derivative import (
    Side,
    derivative_multi,
    epsilon,
    eta,
    highest_derivative,
    highest_derivative_multi,
    removal_multi,
)
from .integral import integral_multi, ul
from .kernels import backend
from .oracle import SearchBounds, brute_force_relevant
from .rdli import comb_rdli, strong_rdli
from .relevance import (
    ReductionStalled,
    RelevanceCertificate,
    certify,
    decide_relevant,
    generic_witness,
    interchange_witness,
)
from .unitary import (
    SpehFactor,
    UnitaryRep,
    ggp_relevant_unitary,
    speh,
    speh_branching_classify,
    speh_shifted_branching_classify,
)

__all__ = [
    "EMPTY",
    "GL0",
    "CuspidalLabel",
    "CuspidalPoint",
    "IrrRep",
    "Multisegment",
    "ReductionStalled",
    "RelevanceCertificate",
    "SearchBounds",
    "Segment",
    "Side",
    "SpehFactor",
    "UnitaryRep",
    "backend",
    "brute_force_relevant",
    "comb_rdli",
    "certify",
    "decide_relevant",
    "derivative_multi",
    "epsilon",
    "eta",
    "generic_witness",
    "ggp_relevant_unitary",
    "highest_derivative",
    "highest_derivative_multi",
    "integral_multi",
    "interchange_witness",
    "is_generic",
    "linked",
    "precedes",
    "removal_multi",
    "speh",
    "speh_branching_classify",
    "speh_shifted_branching_classify",
    "strong_rdli",
    "theta",
    "ul",
    "zelevinsky_involution",
]
