from typing import Optional

from pydantic import TypeAdapter

from udlecs.core import EnvConfig, ParseError, toolkit_logger
from udlecs.constants import ResolverPresets
from udlecs.dns_wire import EcsOption
from udlecs.utils import IPAddress
from .schemas import ResolverPolicy, PolicyField, ForwardPolicy, StripPolicy, RewritePolicy


_policy_adapter = TypeAdapter(PolicyField)


def parse_policy(data: dict) -> ResolverPolicy:
    "{'kind': 'rewrite', 'prefix_len': 24} -> RewritePolicy"
    return _policy_adapter.validate_python(data)


def default_rewrite_policy() -> RewritePolicy:
    config = EnvConfig.get_config()
    return RewritePolicy(prefix_len=config.REWRITE_PREFIX_V4, prefix_len_v6=config.REWRITE_PREFIX_V6)


def preset_policy(name: str) -> ResolverPolicy:
    "公共解析器名称 -> 是否转发ECS"
    behavior = ResolverPresets.get(name.lower())
    if behavior is None:
        raise ParseError(f'unknown resolver preset {name!r}, expected one of {sorted(ResolverPresets)}', 'preset')
    return ForwardPolicy() if behavior == 'forward' else StripPolicy()


def apply_policy(
    policy: ResolverPolicy,
    ecs: Optional[EcsOption],
    client_address: Optional[IPAddress] = None
) -> Optional[EcsOption]:
    "返回解析器发往权威服务器的ECS"
    if isinstance(policy, ForwardPolicy):
        return ecs
    if isinstance(policy, StripPolicy):
        if ecs is not None:
            toolkit_logger.debug(f'Strip ECS {ecs.describe()}')
        return None
    if client_address is None:
        # 不知道客户端地址时无法生成ECS
        return None
    prefix_len = policy.prefix_len if client_address.version == 4 else policy.prefix_len_v6
    rewritten = EcsOption.from_prefix(client_address, prefix_len)
    toolkit_logger.debug(
        f'Rewrite ECS {ecs.describe() if ecs else "-"} -> {rewritten.describe()}'
    )
    return rewritten
