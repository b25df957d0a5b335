"""Multistationarity classification and certified witnesses for small mass-action networks."""

from .classify import (
    ArrowDiagram,
    Capacity,
    CaseLabel,
    Justification,
    Verdict,
    arrow_diagram,
    classify,
    classify_one_rev_one_irrev,
    classify_one_species,
    classify_two_rev,
    classify_two_rxn,
    classify_two_species_two_rxn,
    is_embedding_minimal,
    max_alternating_T,
)
from .enumerate import Bounds, enumerate_and_classify, enumerate_networks
from .geometry import BetaVector, BoxForm, BoxGeometry, beta, box_geometry
from .network import (
    Complex,
    Network,
    NetworkError,
    ParseError,
    Reaction,
    embedded_network,
    enumerate_embedded,
    is_consistent,
    parse_network,
    render_network,
    restrict_reactions,
    stoich_structure,
)
from .ratpoly import RatPoly
from .rootiso import Domain, isolate_positive_roots
from .witness import (
    Witness,
    certify,
    prescribe_roots_one_species,
    reduce_one_species,
    reduce_two_reaction,
    witness_degenerate,
    witness_for,
    witness_two_reaction,
)

__version__ = "0.1.0"
