# -*- coding: utf-8 -*-

from pydantic_settings import BaseSettings, SettingsConfigDict

from udlecs.constants import Limits


class LoadConfig(BaseSettings):
    LOG_DIR: str = 'logs'
    LOG_LEVEL: str = 'info'
    RUN_LOG_ENABLED: bool = True

    POOL_THRESHOLD: int = Limits.DefaultPoolThreshold
    DEFAULT_TTL: int = Limits.DefaultTTL
    EDNS_UDP_PAYLOAD: int = Limits.DefaultUdpPayload

    REWRITE_PREFIX_V4: int = Limits.DefaultRewritePrefixV4
    REWRITE_PREFIX_V6: int = Limits.DefaultRewritePrefixV6

    model_config = SettingsConfigDict(
        env_prefix='UDLECS_',
        env_file='.env',
        extra='ignore'
    )


class EnvConfig:
    __cache = None

    @classmethod
    def load_config(cls) -> None:
        # 加载config
        config = LoadConfig()
        cls.__cache = config

    @classmethod
    def get_config(cls) -> LoadConfig:
        # 获取config，未加载时先加载
        if cls.__cache is None:
            cls.load_config()
        return cls.__cache

    @classmethod
    def refresh_config(cls) -> None:
        # 刷新config
        config = LoadConfig()
        cls.__cache = config
