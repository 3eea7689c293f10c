"""Symmetric and non-symmetric peaks over set partitions, counted three ways:
brute-force enumeration of restricted growth strings, closed-form sums over
Stirling numbers, and coefficient extraction from truncated generating functions.
"""
from .closed_form import total_non_symmetric, total_peaks, total_symmetric
from .enumeration import AggregateTotals, PartitionClass, aggregate, iterate_rgs
from .qpoly import QPoly, deriv_q1, eval_q1
from .series import (
    XSeries,
    coeff,
    nsp_derivative_series,
    nsp_series,
    sp_derivative_series,
    sp_series,
    w_series,
    wt_series,
)
from .stirling import StirlingTable, binomial, int_pow, stirling2
from .words import (
    RGS,
    StatBundle,
    Word,
    count_non_symmetric_peaks,
    count_peaks,
    count_records,
    count_rises_descents,
    count_symmetric_peaks,
    stats,
    validate_rgs,
)

__version__ = "0.1.0"
