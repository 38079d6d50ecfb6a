"""Warping degrees, ascending numbers, and positive braid reductions."""

from .codes import (
    Basepoint,
    DTCode,
    FramingError,
    GaussCode,
    canonical_dt,
    dt_mirror,
    dt_to_gauss,
    gauss_to_dt,
    is_reduced,
    mirror,
    parse_dt,
    parse_gauss,
    reverse,
    rotate,
)
from .warp import WarpResult, apply_roller_coaster, min_warp, warp_from, warp_profile
from .braid import (
    Bigon,
    BraidWord,
    RemovalCertificate,
    ab_counts,
    closure_components,
    closure_gauss,
    find_innermost_bigon,
    parse_braid,
    positive_unknotting,
    random_positive_braid_knot,
    reduce_to_base,
    remove_first_ascending_strand,
    smooth_bigon,
)
from .embed import (
    Crossing,
    NotRealizable,
    PlanarDiagram,
    extract_dt,
    extract_gauss,
    is_realizable,
    pd_from_braid,
    realize,
    writhe,
)
from .invariants import (
    AmbiguousMatch,
    BracketCapExceeded,
    Laurent,
    identify,
    jones,
    kauffman_bracket,
    load_jones_refs,
    match_jones,
    parse_jones_refs,
)

__all__ = [
    "AmbiguousMatch",
    "Basepoint",
    "Bigon",
    "BracketCapExceeded",
    "BraidWord",
    "Crossing",
    "DTCode",
    "FramingError",
    "GaussCode",
    "Laurent",
    "NotRealizable",
    "PlanarDiagram",
    "RemovalCertificate",
    "WarpResult",
    "ab_counts",
    "apply_roller_coaster",
    "canonical_dt",
    "closure_components",
    "closure_gauss",
    "dt_mirror",
    "dt_to_gauss",
    "extract_dt",
    "extract_gauss",
    "find_innermost_bigon",
    "gauss_to_dt",
    "identify",
    "is_realizable",
    "is_reduced",
    "jones",
    "kauffman_bracket",
    "load_jones_refs",
    "match_jones",
    "min_warp",
    "mirror",
    "parse_braid",
    "parse_dt",
    "parse_gauss",
    "pd_from_braid",
    "positive_unknotting",
    "random_positive_braid_knot",
    "realize",
    "reduce_to_base",
    "remove_first_ascending_strand",
    "reverse",
    "rotate",
    "smooth_bigon",
    "warp_from",
    "warp_profile",
    "writhe",
]
