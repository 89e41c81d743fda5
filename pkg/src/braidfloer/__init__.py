"""Symbolic fixed point and Floer-type invariants of framed spherical
braid words, and bookkeeping for the four-manifold obtained by fiber
summing the associated mapping torus with a four-torus and two K3s.

Everything is exact integer computation: free group words, Fox calculus,
Smith normal form with certified transforms, and index sums over
homological twisted-conjugacy classes.
"""

from ._version import __version__
from .braids import (BraidError, BraidIndexError, BraidLetter,
                     BraidSyntaxError, BraidWord, NonTransitiveBraidError,
                     Permutation, induced_permutation, is_transitive,
                     parse_braid, standard_relabeling)
from .floer import (FiberSumPrediction, FloerDims, braid_floer_bound,
                    dims_lower_bound, predict_fiber_sum, suspend_dims)
from .fourmanifold import (AnticanonicalTori, CharacteristicNumbers,
                           ConfigurationError, GluingPiece, PresentedGroup,
                           SumConfiguration, abelianization,
                           anticanonical_tori, assemble_pi1,
                           characteristic_numbers, configuration_from_dict,
                           configuration_to_dict, default_configuration,
                           mapping_torus_presentation, standard_form_order,
                           tietze_simplify)
from .freegroup import (FreeGroupEndo, FreeWord, GroupRingElement,
                        abelianization_matrix, artin_disc_endo, artin_endo,
                        fox_derivative, substitute)
from .nielsen import (NielsenDecomposition, RefinedClass, class_space,
                      lefschetz_number, nielsen_bound, nielsen_decomposition,
                      refine_decomposition, reidemeister_trace,
                      reidemeister_trace_raw, twisted_conjugacy_search)
from .report import build_report, render_text
from .snf import (AbelianGroup, ClassSpace, IntMatrix, SnfResult, cokernel,
                  smith_normal_form)

__all__ = [
    "__version__",
    "BraidError", "BraidIndexError", "BraidLetter", "BraidSyntaxError",
    "BraidWord", "NonTransitiveBraidError", "Permutation",
    "induced_permutation", "is_transitive", "parse_braid",
    "standard_relabeling",
    "FreeWord", "FreeGroupEndo", "GroupRingElement", "substitute",
    "artin_disc_endo", "artin_endo", "fox_derivative",
    "abelianization_matrix",
    "IntMatrix", "SnfResult", "smith_normal_form", "AbelianGroup",
    "cokernel", "ClassSpace",
    "lefschetz_number", "class_space", "reidemeister_trace_raw",
    "reidemeister_trace", "NielsenDecomposition", "nielsen_decomposition",
    "nielsen_bound", "twisted_conjugacy_search", "RefinedClass",
    "refine_decomposition",
    "FloerDims", "dims_lower_bound", "braid_floer_bound", "suspend_dims",
    "FiberSumPrediction", "predict_fiber_sum",
    "PresentedGroup", "mapping_torus_presentation", "assemble_pi1",
    "tietze_simplify", "standard_form_order", "abelianization",
    "GluingPiece", "SumConfiguration", "ConfigurationError",
    "CharacteristicNumbers", "characteristic_numbers",
    "default_configuration", "configuration_from_dict",
    "configuration_to_dict", "AnticanonicalTori", "anticanonical_tori",
    "build_report", "render_text",
]
