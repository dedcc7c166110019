from .error_response_schema import ErrorCode, ErrorReportSchema
from .group_spec_schema import GroupSpecSchema

__all__ = (
    "ErrorCode",
    "ErrorReportSchema",
    "GroupSpecSchema",
)
