"""Counting and constructing perpendicularly inscribed polygons in odd regular polygons."""
from .combinatorics import (
    IntegerPartition,
    MultiplicityVector,
    circular_arrangements,
    enumerate_mixed_partitions,
    enumerate_multiplicity_solutions,
    linear_arrangements,
    totient,
)
from .counting import CountBreakdown, OrbitCount, count_breakdown, count_orbits
from .errors import (
    ConvergenceError,
    DomainError,
    InadmissibleWordError,
    ResourceCapError,
    SingularMapError,
)
from .geometry import (
    AffineMap1D,
    OrbitPolyline,
    PolygonGeometry,
    banach_iterate,
    build_polygon,
    return_map,
    solve_periodic_orbit,
    step_map,
)
from .oracle import (
    canonical_rotation,
    count_orbits_bruteforce,
    enumerate_closed_words,
    is_primitive,
    list_canonical_orbits,
)
from .svg import emit_gallery_svg, emit_svg
from .transition import (
    ExactMatrix,
    TransitionSystem,
    adjacency_matrix,
    closed_walk_count,
    closed_walk_count_binomial,
    matrix_power,
    pure_orbit_count,
    pruned_adjacency_matrix,
    successors,
)

__version__ = "0.1.0"
