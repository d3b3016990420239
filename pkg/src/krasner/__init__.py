"""Finite commutative Krasner hyperrings: axioms, hyperideals, Zariski spectra
and strongly regular relations."""

from .core import (
    HyperringTable,
    ValidationReport,
    Violation,
    classify,
    hypersum,
    negate,
    validate_axioms,
)
from .errors import (
    AxiomError,
    CapacityError,
    ConstructionError,
    DomainError,
    HomomorphismError,
    HyperringError,
    StructureError,
)
from .homomorphisms import GoodHomomorphism, find_isomorphism
from .ideals import (
    Hyperideal,
    combine,
    enumerate_hyperideals,
    ideal_generated_by,
    ideal_properties,
    is_hyperideal,
    is_local,
    mspec,
    nilradical,
    quotient,
    radical,
    spec,
)
from .io import bundled, dump, dumps, load, loads
from .relations import (
    EquivRelation,
    StronglyRegularRelation,
    enumerate_strongly_regular,
    fundamental_spec_correspondence,
    gamma_star,
    is_strongly_regular,
    quotient_ring,
    relation_from_ideal,
    relation_properties,
    relation_spectrum,
)
from .spectrum import (
    SpectrumSpace,
    basic_open,
    closure_of,
    topology_report,
    vanishing_set,
)

__version__ = "0.1.0"
