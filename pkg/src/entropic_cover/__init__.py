"""Entropy on the universal abelian cover of C minus {0, 1}.

Points of the cover carry explicit branch data ``(z; p, q)``. The package
evaluates and analytically continues the entropy function there, builds the
extended 4-term relations, finds exact certificates for identities in the
extended group, and checks the Stirling asymptotics behind the entropy.

The numerical hot loops live in a compiled extension; set
``ENTROPIC_COVER_PURE=1`` to force the numpy fallback. ``BACKEND`` reports
which one was loaded.
"""

from ._kernels import BACKEND
from .asymptotics import (
    AsymptoticReport,
    associativity_check,
    binomial_asymptotic_check,
    entropy_4term_check,
    log_factorial,
)
from .certify import Certificate, find_certificate, named_target, verify_certificate
from .cover import (
    CoverPoint,
    CutPoint,
    DeckVector,
    PolyPath,
    Side,
    continue_point,
    deck_act,
    project,
    winding_data,
)
from .entropy import (
    continue_entropy,
    entropy_cover,
    entropy_cover_many,
    entropy_principal,
    entropy_real_regulator,
)
from .errors import DomainError, RegimeError, StepResolutionError
from .formal import FormalSum, Generator, Group
from .fourterm import (
    ExtendedFourTuple,
    FourTuple,
    LatticeParams,
    LatticeVariant,
    LoopCounts,
    extended_tuple,
    lattice_vector,
    monodromy_transport,
    relation_sum,
    transfer_relation_sum,
)
from .gaussian import GaussianRational
from .groups import (
    RelationInstance,
    Schema,
    c_element,
    chi_map,
    instantiate_relation,
    pi_map,
    real_regulator,
    regulator,
)
from .rng import Xoshiro256

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AsymptoticReport",
    "associativity_check",
    "binomial_asymptotic_check",
    "entropy_4term_check",
    "log_factorial",
    "Certificate",
    "find_certificate",
    "named_target",
    "verify_certificate",
    "CoverPoint",
    "CutPoint",
    "DeckVector",
    "PolyPath",
    "Side",
    "continue_point",
    "deck_act",
    "project",
    "winding_data",
    "continue_entropy",
    "entropy_cover",
    "entropy_cover_many",
    "entropy_principal",
    "entropy_real_regulator",
    "DomainError",
    "RegimeError",
    "StepResolutionError",
    "FormalSum",
    "Generator",
    "Group",
    "ExtendedFourTuple",
    "FourTuple",
    "LatticeParams",
    "LatticeVariant",
    "LoopCounts",
    "extended_tuple",
    "lattice_vector",
    "monodromy_transport",
    "relation_sum",
    "transfer_relation_sum",
    "GaussianRational",
    "RelationInstance",
    "Schema",
    "c_element",
    "chi_map",
    "instantiate_relation",
    "pi_map",
    "real_regulator",
    "regulator",
    "Xoshiro256",
]
