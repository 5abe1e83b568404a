from .run_log import CSVWriter
from .error_log import write_error_info
from .report import RunReport
from .exception import ExceptionLogger, current_report

__all__ = [
    'CSVWriter',
    'write_error_info',
    'RunReport',
    'ExceptionLogger',
    'current_report'
]
