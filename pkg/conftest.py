import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from udlecs.core import EnvConfig


FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tests', 'fixtures')


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    # 日志写到临时目录，配置每个测试重新加载
    monkeypatch.setenv('UDLECS_LOG_DIR', str(tmp_path / 'logs'))
    for name in ('UDLECS_POOL_THRESHOLD', 'UDLECS_LOG_LEVEL', 'UDLECS_RUN_LOG_ENABLED'):
        monkeypatch.delenv(name, raising=False)
    EnvConfig.refresh_config()
    yield
    EnvConfig.refresh_config()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return os.path.join(FIXTURES, name)
    return _path
