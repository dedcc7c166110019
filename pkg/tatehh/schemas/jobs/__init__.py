from .job_spec_schema import JobCommand, JobSpecSchema, OutputFormat
from .report_schema import (
    CheckSchema,
    DimensionRowSchema,
    GeneratorSchema,
    NilpotencySchema,
    PresentationSchema,
    PropertyVerdictSchema,
    RelationVerdictSchema,
    ReportMetaSchema,
    ReportSchema,
)

__all__ = (
    # Job
    "JobCommand",
    "JobSpecSchema",
    "OutputFormat",
    # Report
    "CheckSchema",
    "DimensionRowSchema",
    "GeneratorSchema",
    "NilpotencySchema",
    "PresentationSchema",
    "PropertyVerdictSchema",
    "RelationVerdictSchema",
    "ReportMetaSchema",
    "ReportSchema",
)
