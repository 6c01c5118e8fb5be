"""Exact computation with dyadic piecewise-linear circle homeomorphisms.

The package represents the group of orientation-preserving circle
homeomorphisms that are piecewise linear with dyadic breakpoints and
power-of-two slopes (Thompson's group T), with all arithmetic exact.  On top
of the group operations it provides rotation numbers and torsion
certificates, constructive conjugators onto the standard finite-order
elements, the centralizer short exact sequence with explicit projection and
section, and integer rank calculators for Whitehead groups of finite cyclic
groups and rationalized assembly-source dimension tables.
"""

from .dyadic import Dyadic, ZERO, ONE, HALF, as_dyadic, binary_parts, pow2_ratio
from .element import (
    CircleElement,
    IntervalMap,
    canonical_dpl,
    canonical_dpl_through,
    identity,
    make_element,
    pseudo_rotation,
    random_element,
)
from .dynamics import (
    DEFAULT_CAP,
    INFINITE,
    InfiniteOrder,
    TorsionCertificate,
    Undetermined,
    certificate,
    estimate_rotation_number,
    exact_rotation_number,
    orbit_of_zero,
    order_of,
)
from .conjugacy import (
    conjugator_to_pseudo_rotation,
    normalize_generator,
    subgroup_conjugator,
)
from .centralizer import (
    CentralizerContext,
    is_in_centralizer,
    make_context,
    project,
    section,
    section_defect,
)
from .ktheory import (
    RankTable,
    cyclotomic_rank,
    fj_source_table,
    group_ring_rank,
    h_bt_dim,
    subfin_morphism_count,
    theta_dim,
    wh_growth_chain,
    wh_rank,
)
from .errors import (
    DomainError,
    DyadicParseError,
    InvalidElementError,
    InvariantViolation,
)

__version__ = "0.1.0"
