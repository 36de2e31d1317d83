from kglr.spectral.filters import apply_symbol, eval_filter
from kglr.spectral.models import CoeffVector, FilterKind, Grid, PhysicalField, make_grid
from kglr.spectral.norms import hs_norm
from kglr.spectral.transforms import from_spectral, to_spectral

__all__ = [
    "CoeffVector",
    "FilterKind",
    "Grid",
    "PhysicalField",
    "apply_symbol",
    "eval_filter",
    "from_spectral",
    "hs_norm",
    "make_grid",
    "to_spectral",
]
