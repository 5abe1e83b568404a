import ipaddress
from typing import Annotated, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from udlecs.constants import Limits
from udlecs.dns_wire import EcsOption, QType


IPAddressField = Union[ipaddress.IPv4Address, ipaddress.IPv6Address]
RegionCode = str
Architecture = Literal['standard', 'ecs_basic', 'ecs_user_defined']
Role = Literal['device', 'resolver', 'authoritative']


class DeviceConfig(BaseModel):
    """
    ip_based_location: 设备所在网络的地区(ℓ)
    user_defined_location: 用户注册时选择的地区(ℓ′)
    """
    model_config = ConfigDict(frozen=True)

    device_id: str = Field(min_length=1)
    ip_based_location: RegionCode = Field(pattern=r'^[A-Z]{2}$')
    user_defined_location: RegionCode = Field(pattern=r'^[A-Z]{2}$')
    client_address: IPAddressField


# ------------------------------------------------------
# 解析器对客户端ECS的处理策略
# ------------------------------------------------------

class ForwardPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['forward'] = 'forward'


class StripPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['strip'] = 'strip'


class RewritePolicy(BaseModel):
    "用客户端地址截断后的前缀替换ECS"
    model_config = ConfigDict(frozen=True)

    kind: Literal['rewrite'] = 'rewrite'
    prefix_len: int = Field(default=Limits.DefaultRewritePrefixV4, ge=0, le=32)
    prefix_len_v6: int = Field(default=Limits.DefaultRewritePrefixV6, ge=0, le=128)


ResolverPolicy = Union[ForwardPolicy, StripPolicy, RewritePolicy]
PolicyField = Annotated[ResolverPolicy, Field(discriminator='kind')]


class CacheEntry(BaseModel):
    '''缓存条目

    family = 0 表示该条目来自不带ECS的上游查询，只服务不带ECS的查询
    scope_prefix_len > 0 时 network 是地址截断到 scope 的结果
    scope_prefix_len = 0 或大于 source_prefix_len 时 network 截断到 source_prefix_len，只匹配相同的 source
    '''
    model_config = ConfigDict(frozen=True)

    qname: str
    qtype: QType
    family: Literal[0, 1, 2] = 0
    source_prefix_len: int = Field(default=0, ge=0, le=128)
    scope_prefix_len: int = Field(default=0, ge=0, le=128)
    network: bytes = b''
    addresses: Tuple[IPAddressField, ...] = ()
    expires_at: float

    @property
    def exact_source(self) -> bool:
        return self.scope_prefix_len == 0 or self.scope_prefix_len > self.source_prefix_len

    @property
    def match_prefix_len(self) -> int:
        return self.source_prefix_len if self.exact_source else self.scope_prefix_len

    @property
    def key(self) -> tuple:
        return (self.qname, self.qtype, self.family, self.match_prefix_len, self.exact_source, self.network)


class Hop(BaseModel):
    model_config = ConfigDict(frozen=True)

    hop_index: int = Field(ge=0)
    sender: Role
    receiver: Role
    qname: str
    ecs: Optional[EcsOption] = None
    answer_ips: Tuple[IPAddressField, ...] = ()
    rcode: int = 0

    def to_row(self) -> dict:
        return {
            'hop_index': self.hop_index,
            'sender': self.sender,
            'receiver': self.receiver,
            'qname': self.qname,
            'ecs_family': self.ecs.family if self.ecs else '',
            'ecs_prefix': self.ecs.source_prefix_len if self.ecs else '',
            'ecs_address': str(self.ecs.ip_address()) if self.ecs else '',
            'answer_ips': ' '.join(str(ip) for ip in self.answer_ips),
            'scope': self.ecs.scope_prefix_len if self.ecs else ''
        }


class ScenarioTranscript(BaseModel):
    model_config = ConfigDict(frozen=True)

    architecture: Architecture
    device_id: str
    hops: Tuple[Hop, ...] = ()

    @property
    def delivered(self) -> Tuple[IPAddressField, ...]:
        "最后一跳(解析器 -> 设备)交付的地址"
        return self.hops[-1].answer_ips if self.hops else ()


class ForwardProbe(BaseModel):
    model_config = ConfigDict(frozen=True)

    policy: str
    sent: str
    received: Optional[str] = None
    echoed: Optional[str] = None
    forwarded: bool
    echo_matches: bool


# ------------------------------------------------------
# 场景文件
# ------------------------------------------------------

class DeviceDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    device_id: str
    ip_based_location: str
    user_defined_location: str
    client_address: Optional[str] = None


class ScenarioDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    architecture: Architecture
    device: DeviceDocument
    resolver_location: Optional[str] = None
    zone: str
    qname: str
    policy: Optional[PolicyField] = None

