import os

from udlecs.utils import TimeUtils
from udlecs.core import error_log_path


SEPARATOR = '-' * 109


def write_error_info(
    error_id: str,
    error_type: str,
    error_name: str,
    command: str = None,
    error_args: str = None,
    error_info: str = None
) -> str:
    "内部错误写入 LOG_DIR/error/<date>.txt，返回文件路径"
    form_time = TimeUtils.now_iso()
    directory = error_log_path()
    os.makedirs(directory, exist_ok=True)
    file_path = os.path.join(directory, f'{TimeUtils.date_of(form_time)}.txt')
    with open(file_path, "a", encoding="utf-8") as f:
        f.write(SEPARATOR + '\n')
        f.write(f">Error ID:     {error_id}\n")
        f.write(f">Error Type:   {error_type}\n")
        f.write(f">Error Name:   {error_name}\n")
        f.write(f">Error Time:   {form_time}\n")
        f.write(f">Command:      {command or '-'}\n")
        f.write(f">Error Info:   \n{error_args}\n{error_info}\n")
        f.write(SEPARATOR + '\n')
    return file_path
