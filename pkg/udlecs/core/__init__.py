from .config import EnvConfig
from .logger import toolkit_logger, init_logger
from .paths import log_dir, error_log_path, run_log_path
from .exception import (
    ToolkitError,
    InvalidName,
    InvalidEcs,
    Truncated,
    Malformed,
    UnsupportedType,
    ParseError,
    OverlapError,
    DefaultMismatch,
    NameNotFound,
    UnknownRegion,
    InvalidDevice,
    UnknownDevice,
    EmptySelection,
    SchemaError,
    MixedDevices,
    EmptyDomainSet,
    DivisionGuard
)

__all__ = [
    'EnvConfig',
    'toolkit_logger',
    'init_logger',
    'log_dir',
    'error_log_path',
    'run_log_path',
    'ToolkitError',
    'InvalidName',
    'InvalidEcs',
    'Truncated',
    'Malformed',
    'UnsupportedType',
    'ParseError',
    'OverlapError',
    'DefaultMismatch',
    'NameNotFound',
    'UnknownRegion',
    'InvalidDevice',
    'UnknownDevice',
    'EmptySelection',
    'SchemaError',
    'MixedDevices',
    'EmptyDomainSet',
    'DivisionGuard'
]
