"""Hardness reductions with provenance and solution mappers in both directions."""

from .base import Reduction, ReductionOutput, require_factor
from .directed import (
    COLORING,
    EVENCYCLE,
    HAMPATH,
    VDP,
    map_all_even_factor_to_coloring,
    map_all_odd_factor_to_hampath,
    map_coloring_to_all_even_factor,
    map_even_dicycle_to_exists_even_factor,
    map_exists_even_factor_to_even_dicycle,
    map_exists_odd_factor_to_paths,
    map_hampath_to_all_odd_factor,
    map_paths_to_exists_odd_factor,
    reduce_2vdp_to_exists_odd,
    reduce_3edgecoloring_to_all_even,
    reduce_evendicycle_to_exists_even,
    reduce_hampath_to_all_odd,
)
from .lift import LIFT, lift_directed_to_undirected, lift_factor, unlift_factor
from .mixed import (
    MCF,
    PRCF,
    SMCF,
    THREEDM,
    reduce_3dm_to_prcf,
    reduce_mcf_to_exists_even_mcf,
    reduce_prcf_to_smcf,
    reduce_smcf_to_mcf,
)

REGISTRY: dict[str, Reduction] = {
    r.id: r for r in (HAMPATH, COLORING, VDP, EVENCYCLE, LIFT, THREEDM, PRCF, SMCF, MCF)
}


def get(reduction_id: str) -> Reduction:
    try:
        return REGISTRY[reduction_id]
    except KeyError:
        raise KeyError(f"unknown reduction {reduction_id!r}; known: {', '.join(REGISTRY)}") from None
