import os

from .config import EnvConfig


def log_dir() -> str:
    return EnvConfig.get_config().LOG_DIR

def error_log_path() -> str:
    return os.path.join(log_dir(), "error")

def run_log_path() -> str:
    return os.path.join(log_dir(), "runs")
