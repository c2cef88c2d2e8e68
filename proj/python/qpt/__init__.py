"""Decision machinery for quadratic points on prime-power-level modular curves."""

from qpt._qpt import (  # noqa: F401
    ap,
    census,
    congruence_invariants,
    count_points,
    cs_bound,
    ec_count,
    gl2_order,
    jacobian,
    level_bound,
    locally_soluble,
    pencil_quartic,
    sl2_order,
    solve_conic,
    unique_genus1_quotient,
    verdict,
)
