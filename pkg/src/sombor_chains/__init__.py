"""Sombor indices of benzenoid-type graphs: builders, closed forms, Monte Carlo checks."""
from .errors import DomainError, GraphStructureError, ResourceGuardError, UnsupportedCensusError
from .generators import (ChainFamily, ChainProbabilities, ChainSpec, ChainStep, build_chain, build_graphene,
                         build_hexagonal_chain, build_nanocone, build_phenylene_chain, enumerate_chains,
                         incremental_census, sample_chain)
from .graph_core import (EdgeTypeCensus, MolecularGraph, average_degree, degree_sequence, edge_type_census,
                         validate_handshake)
from .sombor import (AVERAGE, PLAIN, REDUCED, IndexVariant, sombor_from_census, sombor_general,
                     sombor_variant)

__version__ = "0.1.0"
