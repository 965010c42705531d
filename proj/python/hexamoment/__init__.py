"""Exact statistics of uniformly random lozenge tilings of an a,b,c,a,b,c hexagon.

Counting, placement probabilities, moments of inertia, uniform sampling and
rendering, all in exact arithmetic. Probabilities and moments come back as
:class:`fractions.Fraction`.
"""

from hexamoment._core import (
    HexamomentError,
    TooLargeError,
    column_sum,
    count,
    enumerate_box,
    expected_entries,
    hook_content_gf,
    macmahon_count,
    mean_norm_ssyt,
    moments,
    prob_table,
    render_ascii,
    render_svg,
    row_sum,
    sample,
    ssyt_count,
    staircase_mean_norm,
    staircase_stats,
    verify,
)

__all__ = [
    "HexamomentError",
    "TooLargeError",
    "column_sum",
    "count",
    "enumerate_box",
    "expected_entries",
    "hook_content_gf",
    "macmahon_count",
    "mean_norm_ssyt",
    "moments",
    "prob_table",
    "render_ascii",
    "render_svg",
    "row_sum",
    "sample",
    "ssyt_count",
    "staircase_mean_norm",
    "staircase_stats",
    "verify",
]
