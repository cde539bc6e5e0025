"""
Orchestration shared by the management command and the HTTP API.
"""

from nullity_engine.services.experiment_service import CLASSIFY_KINDS, ExperimentService
from nullity_engine.services.export_service import (
    ExportFormat,
    interval_rows,
    jsonable,
    render_document,
    render_rows,
    rows_to_frame,
    spectrum_rows,
    write_text,
)
from nullity_engine.services.zoo_service import ZooCase, ZooOutcome, ZooReport, ZooService

__all__ = [
    'CLASSIFY_KINDS',
    'ExperimentService',
    'ExportFormat',
    'interval_rows',
    'jsonable',
    'render_document',
    'render_rows',
    'rows_to_frame',
    'spectrum_rows',
    'write_text',
    'ZooCase',
    'ZooOutcome',
    'ZooReport',
    'ZooService',
]
