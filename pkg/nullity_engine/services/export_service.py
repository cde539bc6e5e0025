"""
Deterministic CSV and JSON rendering of experiment results.

Rationals are written as exact ``p/q`` strings, floats at 17 significant
digits in CSV and JSON keys are sorted, so identical inputs give identical
files.
"""

import json
import logging
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

import mpmath
import numpy as np
import pandas as pd

from nullity_engine.spectral.fourier import spectrum_samples
from nullity_engine.utils.numeric import format_number

logger = logging.getLogger(__name__)


class ExportFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'


def jsonable(value):
    """Recursively convert engine values to JSON-compatible ones."""
    if hasattr(value, 'to_dict'):
        return jsonable(value.to_dict())
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating, mpmath.mpf)):
        value = float(value)
        if not np.isfinite(value):
            return format_number(value)
        return value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(item) for item in value]
    return str(value)


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    return format_number(value)


def rows_to_frame(rows):
    """DataFrame of formatted cells; columns in first-seen order."""
    columns = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return pd.DataFrame(
        [[_cell(row.get(column)) for column in columns] for row in rows], columns=columns
    )


def interval_rows(intervals):
    """One row per interval of a level set: index, left, right, length."""
    return [
        {'index': index, 'left': left, 'right': right, 'length': right - left}
        for index, (left, right) in enumerate(intervals)
    ]


def spectrum_rows(intervals, xi):
    """
    Rows ``xi, re, im`` of the Fourier transform of the indicator of ``intervals``.

    Args:
        intervals (IntervalSet): The set
        xi (array-like): Frequencies, in output order

    Returns:
        list: One dict per frequency
    """
    samples = spectrum_samples(intervals, xi)
    logger.debug(f"sampled the spectrum of {len(intervals)} intervals at {len(samples)} frequencies")
    return [{'xi': float(x), 're': float(re), 'im': float(im)} for x, re, im in samples]


def render_rows(rows, fmt=ExportFormat.CSV):
    fmt = ExportFormat(fmt)
    if fmt is ExportFormat.JSON:
        return render_document(list(rows))
    return rows_to_frame(list(rows)).to_csv(index=False, lineterminator='\n')


def render_document(document):
    return json.dumps(jsonable(document), indent=2, sort_keys=True) + '\n'


def write_text(text, path=None, stream=None):
    """
    Write rendered output to ``path`` when given, otherwise to ``stream``.

    Returns:
        str: The text written
    """
    if path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        logger.info(f"wrote {len(text)} characters to {path}")
    elif stream is not None:
        stream.write(text)
    return text
