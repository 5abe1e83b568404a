import os
import json
from typing import Dict, List, Any, Optional

import click
from pydantic import BaseModel, Field

from udlecs.core import EnvConfig, toolkit_logger
from udlecs.utils import TimeUtils, JsonUtils
from .run_log import CSVWriter


class RunReport(BaseModel):
    """一次命令运行的记录，时间戳只出现在这里，不写入结果文件"""
    command: str
    started_at: str = ''
    seed: Optional[int] = None
    input_digests: Dict[str, str] = Field(default_factory=dict)
    outputs: List[str] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)
    exit_code: int = 0
    elapsed_ms: int = 0

    @classmethod
    def begin(cls, ctx: click.Context) -> 'RunReport':
        params = ' '.join(
            f'--{key.replace("_", "-")}={value}'
            for key, value in sorted(ctx.params.items())
            if value is not None
        )
        seed = (ctx.obj or {}).get('seed')
        return cls(
            command=f'{ctx.command_path} {params}'.strip(),
            started_at=TimeUtils.now_iso(),
            seed=seed
        )

    def add_input(self, path: str) -> None:
        self.input_digests[path] = JsonUtils.digest(path)

    def add_output(self, path: str) -> None:
        if path not in self.outputs:
            self.outputs.append(path)

    def to_record(self) -> list:
        return [
            self.started_at,
            self.command,
            ';'.join(f'{path}={digest}' for path, digest in sorted(self.input_digests.items())),
            ';'.join(self.outputs),
            self.exit_code,
            self.elapsed_ms
        ]

    def finish(self, exit_code: int, elapsed_ms: int, report_path: str = None) -> None:
        self.exit_code = exit_code
        self.elapsed_ms = elapsed_ms
        if EnvConfig.get_config().RUN_LOG_ENABLED:
            writer = CSVWriter()
            try:
                writer.write(self.to_record())
            except OSError:
                toolkit_logger.warning('Run log is not writable, skipping run record.')
            finally:
                writer.close()
        if report_path:
            directory = os.path.dirname(report_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(report_path, 'w', encoding='utf-8') as f:
                json.dump(self.model_dump(), f, ensure_ascii=False, indent=2, sort_keys=True, default=str)
