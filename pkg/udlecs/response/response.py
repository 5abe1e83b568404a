from typing import Optional
from typing_extensions import TypedDict


class ExitDict(TypedDict):
    '''命令返回数据格式'''
    exit_code: int
    message: str
    error_id: Optional[str]


class ExitResponse:
    '''命令退出码

    0       -> 成功
    2       -> 参数/用法错误(click)
    3-9     -> 数据错误，由 ToolkitError.exit_code 决定
    70      -> 内部不变量被破坏
    '''
    Success = 0
    UsageError = 2
    DataError = 3
    EmptySelection = 4
    MixedDevices = 5
    EmptyDomainSet = 6
    DivisionGuard = 7
    InternalError = 70

    @staticmethod
    def get_success_response() -> ExitDict:
        "成功的返回值"
        return {
            'exit_code': ExitResponse.Success,
            'message': 'Success',
            'error_id': None
        }

    @staticmethod
    def get_error_response(
        exit_code: int,
        message: str,
        error_id: str = None
    ) -> ExitDict:
        "失败的返回值"
        return {
            'exit_code': exit_code,
            'message': message,
            'error_id': error_id
        }
