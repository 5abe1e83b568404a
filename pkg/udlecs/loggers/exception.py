import uuid
import traceback
from functools import wraps

import click

from udlecs.core import ToolkitError, toolkit_logger
from udlecs.response import ExitResponse
from udlecs.utils import TimeUtils
from .error_log import write_error_info
from .report import RunReport


class ExceptionLogger:
    @staticmethod
    def handle_command_exception(func):
        "负责命令执行期间异常信息的捕获，并记录本次运行"
        @wraps(func)
        def wrapper(*args, **kwargs):
            ctx = click.get_current_context()
            ctx.ensure_object(dict)
            report = RunReport.begin(ctx)
            ctx.obj['report'] = report
            start = TimeUtils.timestamp_ms()
            response = ExitResponse.get_success_response()
            try:
                return func(*args, **kwargs)
            except click.ClickException as e:
                response = ExitResponse.get_error_response(e.exit_code, e.format_message())
                raise
            except (click.exceptions.Exit, click.exceptions.Abort):
                raise
            except ToolkitError as e:
                response = ExitResponse.get_error_response(e.exit_code, str(e))
                click.echo(str(e), err=True)
            except Exception as e:
                error_id = str(uuid.uuid4())
                write_error_info(
                    error_id = error_id,
                    error_type = 'ProgramError',
                    error_name = str(type(e).__name__),
                    command = report.command,
                    error_args = str(args) + str(kwargs),
                    error_info = traceback.format_exc()
                )
                response = ExitResponse.get_error_response(ExitResponse.InternalError, 'InternalError', error_id)
                toolkit_logger.error(f'Internal error {error_id}: {type(e).__name__}')
                click.echo(f'InternalError: {e} (error id {error_id})', err=True)
            finally:
                elapsed = TimeUtils.timestamp_ms() - start
                report.finish(response['exit_code'], elapsed, ctx.obj.get('report_path'))
            ctx.exit(response['exit_code'])
        return wrapper


def current_report() -> RunReport:
    return click.get_current_context().obj['report']
