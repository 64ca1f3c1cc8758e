"""Grid states: mixtures of two-term pure states labelled by grid graphs,
with graphical and numerical entanglement tests."""

from .graph import Bipartition, GridError, GridGraph, all_cuts, flatten, grid_rank, validate
from .criteria import ccnr_entangled, degree_criterion
from .surgery import gme_verdict, range_verdict, surgery_terminals
from .classify import Label, classify

__all__ = [
    "Bipartition",
    "GridError",
    "GridGraph",
    "Label",
    "all_cuts",
    "ccnr_entangled",
    "classify",
    "degree_criterion",
    "flatten",
    "gme_verdict",
    "grid_rank",
    "range_verdict",
    "surgery_terminals",
    "validate",
]
