"""Finite Krasner (m,n)-hyperrings: construction, validation, hyperideal
classification under expansions, and exhaustive checks of statements about
delta(0)-hyperideals."""

from .classify import (ClassificationRecord, classify_all, classify_ideal,
                       find_sn_delta0_zeros, is_delta0_hyperideal, is_delta_primary,
                       is_J_hyperideal, is_N_hyperideal, is_primary, is_prime,
                       is_sn_absorbing_delta0, is_strongly_weakly_sn_absorbing_delta0,
                       is_weakly_sn_absorbing_delta0)
from .constructions import (HomMap, localize, nakayama_check, product, quotient,
                            validate_homomorphism)
from .errors import (ArityError, AxiomError, BudgetExceeded, ConstructionError,
                     ConsistencyError, DomainError, HyperringError, StructureAnomaly,
                     TableError)
from .expansions import (Expansion, builtin_expansion, compose_expansions, residual_expansion,
                         validate_expansion)
from .hypercore import (HyperStructure, derive_arity, f_fold, g_fold, mask, members,
                        validate_structure)
from .ideals import (enumerate_hyperideals, hyperideals_by_powerset, jacobson_radical,
                     prime_radical, radical, radical_by_powers)
from .results import TheoremResult
from .theorems import THEOREM_IDS, SuiteReport, run_suite, run_theorem
from .workbench import (CorpusSpec, builtin_structure, default_corpus, default_pairs,
                        generate_corpus, parse_structure, serialize_structure)

__version__ = "0.1.0"
