"""Subdivided-star containment, path-closure reductions, structural
decompositions and finite prefixes of universal graphs, each with a checker."""

from .certificates import (Embedding, MinorModel, StarPattern, StarWitness,
                           TopologicalEmbedding)
from .connectivity import (block_tree, independent_paths, long_cycle,
                           longest_path, longest_path_bounds)
from .containment import (contains_minor, contains_star, contains_subgraph,
                          contains_topological)
from .decomposition import (Decomposition, DecompositionParams, check_block_bound,
                            decompose, verify_decomposition)
from .errors import (GraphError, ParseError, PreconditionError, ResourceError,
                     StarUnivError, StructuralError)
from .gadgets import (alternating_sequences, build_G_alpha, build_H1, build_H2,
                      check_claim1, check_claim2, level_set, negative_params,
                      relation_R)
from .graph import ColoredGraph, Graph
from .reduction import (blowup, derive_gamma_star, minimal_model,
                        minor_to_topminor_witness, suppress_degree_two)
from .skfree import IncidenceEnumeration, build_prefix, embed_skfree
from .universal import (RegistryUniversal, assemble, embed_short,
                        embed_universal, trivial_universal_prefix)

__version__ = "0.1.0"
