"""Truncated jet arithmetic over Q, Q(sqrt(d)) and floats."""
from sharksfin.jets.kernel import BACKEND, compiled_available
from sharksfin.jets.series import (
    EXACT,
    FLOAT,
    QUAD,
    CurveJet,
    Jet2,
    JetError,
    MapJet2,
    compose_with_curve,
    directional_iterate,
    map_compose_curve,
    partial_derivative,
    series_compose,
    series_elem,
    series_mul,
)

__all__ = [
    "BACKEND",
    "EXACT",
    "FLOAT",
    "QUAD",
    "CurveJet",
    "Jet2",
    "JetError",
    "MapJet2",
    "compiled_available",
    "compose_with_curve",
    "directional_iterate",
    "map_compose_curve",
    "partial_derivative",
    "series_compose",
    "series_elem",
    "series_mul",
]
