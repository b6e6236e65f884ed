"""Exact analysis of stable periodic orbits of the discontinuous piecewise-linear
map x -> a*x + mu (x <= 0), x -> b*x + mu + l (x > 0) with slopes in (0, 1)."""

from .errors import (
    CeilingExceeded,
    DegenerateConstraint,
    DepthExceeded,
    NotBlockDecomposable,
    NotCoprime,
    NotMolecular,
    OrbitError,
    OutOfOrbitRange,
    UniformPattern,
)
from .interval import (
    AffineTrace,
    Bound,
    BoundLocations,
    MuInterval,
    Params,
    atomic_interval_L,
    atomic_interval_R,
    bound_locations,
    geom_sum,
    is_admissible,
    molecular_pair_interval,
    mu_interval,
    parse_rational,
    rational_str,
    solve_x0,
    trace,
)
from .oracle import OrbitReport, Regime, classify_regime, find_orbit, step, sweep
from .patterngen import (
    PatternFamily,
    euler_phi,
    exhaustive_admissible,
    generate_period,
    pattern_for,
)
from .renorm import (
    Descent,
    InducedMap,
    RegionTag,
    classify_region,
    descend,
    expand_blocks,
    induce,
    induce_r,
    pattern_at,
)
from .symbolic import (
    BinaryCode,
    Pattern,
    block_decompose,
    dual,
    encode,
    has_LL_and_RR,
    is_primitive,
    l_way,
    l_way_shift,
    max_run,
    r_way,
    r_way_shift,
)

__version__ = "0.1.0"
