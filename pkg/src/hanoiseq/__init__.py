"""Tower of Hanoi move sequences, substitution morphisms, automata with
output, Toeplitz constructions, and desk-scale verification oracles."""

from .algebra import (InsufficientTruncationError, Relation, Series,
                      evaluate_relation, find_algebraic_relation,
                      period_doubling_relation, series_from_sequence)
from .automaton import (Dfao, KernelReport, NonUniformError, dfao_eval,
                        dfao_from_uniform_morphism, kernel_explore)
from .catalog import (UnknownSequenceError, catalog_lookup, catalog_names,
                      catalog_prefix, morphic_entry)
from .classicseq import (BAR_PROJECTION, IntSequence, derive_T, derive_U,
                         derive_V, derive_Z, doublefree_exhaustive,
                         doublefree_oracle)
from .hanoi import (CLASSICAL, CYCLIC, LAZY, DiskOrderError, EmptySourceError,
                    HanoiState, IllegalMoveError, Trace, UnreachableError,
                    Variant, VariantViolationError, apply_move, bar,
                    bfs_optimal, factor_census, olive_solve, simulate,
                    squarefree_check, variant_by_name, verify_classical_prefix)
from .nonuniform import (Construction, ConstructionError, construct_nonuniform,
                         find_expanding_letter, validate_construction,
                         validation_failures, verify_fixed_point_equality)
from .toeplitz import HOLE, NonConvergentError, ToeplitzSpec, fill_pass, toeplitz_expand
from .words import (Alphabet, Coding, DomainError, Morphism, MorphicSpec,
                    ProlongabilityError, Word, apply_coding, is_prolongable,
                    iterate_fixed_point, morphism_apply, spec_from_json,
                    spec_to_json)

__version__ = "0.1.0"
