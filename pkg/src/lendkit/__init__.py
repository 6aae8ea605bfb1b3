"""Finite 2-categories, lax ends and coends, and the limits built from them, computed exactly."""
from .cat import (
    FinCat, Funct, NatT, check_fin_cat, discrete_cat, enumerate_functors, enumerate_nats, functor_category,
    poset_cat, product_cat, slice_over, terminal_cat, validate_fin_cat, walking_arrow,
)
from .corpus import Corpus, generate_corpus
from .descent import coherence_from_diagram, descent_object, lax_end_via_descent
from .ends import (
    EndResult, end_of, enumerate_wedges, factorize_modification, factorize_wedge, iterated_end, lax_coend,
    partial_end, swap_diagram,
)
from .errors import Budget, BudgetExceeded, LendkitError, UnsupportedInstance, ValidationError
from .io import ParseError, export_dot, parse_document, read_document, serialize, serialize_document
from .iso import is_equivalent, is_isomorphic
from .laws import LAWS, LawResult, run_laws
from .limits import grothendieck, lax_limit, lax_slice, weighted_limit_strict, yoneda_sharp_weight
from .sharpflat import check_adjunction, flat_of, sharp_of, unit_sharp, counit_flat
from .twocat import (
    Fin2Cat, LaxTransformation, Modification, TwoFunctor, check_2cat, check_2functor, constant_diagram,
    enumerate_lax_transformations, enumerate_modifications, hom_2functor, lax_transformation_category,
    locally_discrete, power_diagram,
)

__version__ = "0.1.0"
