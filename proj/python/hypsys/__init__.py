"""Python bindings for the hypsys library."""

import json

from ._core import (
    HypsysError,
    census,
    central_loop_vertex,
    charpoly,
    compare_roots,
    diagram_size,
    family_P_nk,
    family_P_nKl_even,
    family_P_nKl_odd,
    path_matrix,
    perron_root,
    second_length,
    second_polynomial,
    spectrum_json,
    systole,
    systole_polynomial,
    verify,
    zrl_normalize,
)


def spectrum(n, bound="2", threads=1, max_depth=0, time_budget=0.0):
    """Return (entries, complete) with entries parsed from the JSON output."""
    text, complete = spectrum_json(n, str(bound), threads, max_depth, time_budget)
    return json.loads(text), complete


__all__ = [
    "HypsysError",
    "census",
    "central_loop_vertex",
    "charpoly",
    "compare_roots",
    "diagram_size",
    "family_P_nk",
    "family_P_nKl_even",
    "family_P_nKl_odd",
    "path_matrix",
    "perron_root",
    "second_length",
    "second_polynomial",
    "spectrum",
    "spectrum_json",
    "systole",
    "systole_polynomial",
    "verify",
    "zrl_normalize",
]
