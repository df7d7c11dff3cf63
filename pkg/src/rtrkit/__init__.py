"""Exact calculus for proper rational tangle replacement and Montesinos knots."""
from .arith import INFINITY, Frac, PreconditionError, bezout_bc_ad, frac_make, frac_to_cf, parse_frac
from .montesinos import (
    MontesinosLink,
    double_branched_cover,
    is_knot,
    m_equivalent,
    m_mirror,
    m_normalize,
)
from .parse import ParseError, parse_montesinos, parse_seifert
from .seifert import (
    SeifertInvariants,
    cable_surgery_slope,
    homology_order,
    s_equivalent,
    s_mirror,
    s_normalize,
    torus_knot_surgery,
    unknot_surgery_equiv,
)
from .tangle import (
    Connectivity,
    CrossingStep,
    TwistWord,
    connectivity,
    eval_twist_word,
    is_proper_rtr,
    slope_distance,
    twist,
    twist_word_from_slope,
    unknotting_sequence,
)
from .uq import (
    RtrMove,
    TorusFormWitness,
    UqVerdict,
    alt_rtr_parameters,
    classify_uq,
    find_torus_form,
    four_tangle_obstruction,
    unknotting_moves,
)

__version__ = "0.1.0"
