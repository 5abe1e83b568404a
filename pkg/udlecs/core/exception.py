from typing import Optional


class ToolkitError(Exception):
    '''工具包异常基类

    1000-1999 -> dns_wire
    2000-2999 -> geo_zone
    3000-3999 -> resolver_sim
    4000-4999 -> traffic_analysis
    5000-5999 -> mud_kit
    '''
    code: int = 1000
    exit_code: int = 3

    def __init__(self, message: str, context: Optional[str] = None):
        self.message = message
        self.context = context
        super().__init__(self.__str__())

    def __str__(self) -> str:
        if self.context:
            return f'{type(self).__name__}: {self.context}: {self.message}'
        return f'{type(self).__name__}: {self.message}'


# dns_wire

class InvalidName(ToolkitError):
    code = 1001

class InvalidEcs(ToolkitError):
    code = 1002

class Truncated(ToolkitError):
    code = 1003

class Malformed(ToolkitError):
    code = 1004

class UnsupportedType(ToolkitError):
    code = 1005


# geo_zone

class ParseError(ToolkitError):
    code = 2001

    def __init__(self, message: str, context: Optional[str] = None, errors: Optional[list] = None):
        # errors: [(position, message), ...]
        self.errors = errors or []
        super().__init__(message, context)

class OverlapError(ToolkitError):
    code = 2002

class DefaultMismatch(ToolkitError):
    code = 2003

class NameNotFound(ToolkitError):
    code = 2004

class UnknownRegion(ToolkitError):
    code = 2005


# resolver_sim

class InvalidDevice(ToolkitError):
    code = 3001


# traffic_analysis

class UnknownDevice(ToolkitError):
    code = 4001

class EmptySelection(ToolkitError):
    code = 4002
    exit_code = 4


# mud_kit

class SchemaError(ToolkitError):
    code = 5001

class MixedDevices(ToolkitError):
    code = 5002
    exit_code = 5

class EmptyDomainSet(ToolkitError):
    code = 5003
    exit_code = 6

class DivisionGuard(ToolkitError):
    code = 5004
    exit_code = 7
