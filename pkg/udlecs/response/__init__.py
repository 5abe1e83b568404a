from .response import ExitResponse, ExitDict

__all__ = [
    'ExitResponse',
    'ExitDict'
]
