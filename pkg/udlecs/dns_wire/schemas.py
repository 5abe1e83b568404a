import math
import ipaddress
from typing import Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from udlecs.constants import DnsCodes, FAMILY_MAX_PREFIX, Limits
from udlecs.utils import PrefixUtils, IPAddress, IPNetwork
from .ecs import truncate_to_prefix


QType = Literal['A', 'AAAA']


def canonical_name(name: str) -> str:
    "小写，去掉末尾的点"
    name = name.strip().lower()
    if name.endswith('.'):
        name = name[:-1]
    return name


class EcsOption(BaseModel):
    "address 只保存 source_prefix_len 覆盖的字节，其余位为0"
    model_config = ConfigDict(frozen=True)

    family: Literal[1, 2]
    source_prefix_len: int = Field(ge=0, le=128)
    scope_prefix_len: int = Field(default=0, ge=0, le=128)
    address: bytes = b''

    @classmethod
    def from_prefix(cls, address: IPAddress, prefix_len: int, scope_prefix_len: int = 0) -> 'EcsOption':
        return cls(
            family=PrefixUtils.family_of(address),
            source_prefix_len=prefix_len,
            scope_prefix_len=scope_prefix_len,
            address=truncate_to_prefix(address, prefix_len)
        )

    @classmethod
    def from_network(cls, network: IPNetwork, scope_prefix_len: int = 0) -> 'EcsOption':
        return cls.from_prefix(network.network_address, network.prefixlen, scope_prefix_len)

    @property
    def max_prefix_len(self) -> int:
        return FAMILY_MAX_PREFIX[self.family]

    @property
    def expected_address_length(self) -> int:
        return math.ceil(self.source_prefix_len / 8)

    def ip_address(self) -> IPAddress:
        "补零后的完整地址"
        width = 4 if self.family == DnsCodes.FAMILY_IPV4 else 16
        padded = self.address[:width] + b'\x00' * (width - len(self.address[:width]))
        return ipaddress.ip_address(padded)

    def network(self) -> IPNetwork:
        return PrefixUtils.network_of(self.ip_address(), self.source_prefix_len)

    def with_scope(self, scope_prefix_len: int) -> 'EcsOption':
        return self.model_copy(update={'scope_prefix_len': scope_prefix_len})

    def describe(self) -> str:
        return f'{self.ip_address()}/{self.source_prefix_len}/{self.scope_prefix_len}'


class Question(BaseModel):
    model_config = ConfigDict(frozen=True)

    qname: str
    qtype: QType = 'A'
    qclass: Literal['IN'] = 'IN'

    @field_validator('qname')
    @classmethod
    def normalize_qname(cls, value: str) -> str:
        return canonical_name(value)


class ResourceRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    rtype: QType
    ttl: int = Field(default=Limits.DefaultTTL, ge=0, le=2**31 - 1)
    rdata: Union[ipaddress.IPv4Address, ipaddress.IPv6Address]

    @field_validator('name')
    @classmethod
    def normalize_name(cls, value: str) -> str:
        return canonical_name(value)

    @model_validator(mode='after')
    def check_rdata_family(self) -> 'ResourceRecord':
        expected = 4 if self.rtype == 'A' else 6
        if self.rdata.version != expected:
            raise ValueError(f'rdata {self.rdata} does not match rtype {self.rtype}')
        return self


class EdnsOpt(BaseModel):
    model_config = ConfigDict(frozen=True)

    udp_payload_size: int = Field(default=Limits.DefaultUdpPayload, ge=0, le=65535)
    ecs: Optional[EcsOption] = None


class DnsMessage(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int = Field(default=0, ge=0, le=65535)
    is_response: bool = False
    recursion_desired: bool = True
    recursion_available: bool = False
    rcode: int = Field(default=DnsCodes.RCODE_NOERROR, ge=0, le=15)
    question: Question
    answers: Tuple[ResourceRecord, ...] = ()
    edns: Optional[EdnsOpt] = None

    @model_validator(mode='after')
    def check_query_has_no_answers(self) -> 'DnsMessage':
        if not self.is_response and self.answers:
            raise ValueError('a query carries no answers')
        if not self.is_response and self.ecs is not None and self.ecs.scope_prefix_len != 0:
            raise ValueError('ECS scope in a query must be 0')
        return self

    @property
    def ecs(self) -> Optional[EcsOption]:
        return self.edns.ecs if self.edns else None

    @property
    def addresses(self) -> Tuple[IPAddress, ...]:
        return tuple(rr.rdata for rr in self.answers)

    @classmethod
    def make_query(
        cls,
        qname: str,
        qtype: QType = 'A',
        ecs: Optional[EcsOption] = None,
        id: int = 0,
        udp_payload_size: int = Limits.DefaultUdpPayload
    ) -> 'DnsMessage':
        edns = EdnsOpt(udp_payload_size=udp_payload_size, ecs=ecs) if ecs is not None else None
        return cls(id=id, question=Question(qname=qname, qtype=qtype), edns=edns)

    def with_ecs(self, ecs: Optional[EcsOption]) -> 'DnsMessage':
        "替换ECS；没有ECS时保留EDNS本身"
        if self.edns is None and ecs is None:
            return self
        edns = (self.edns or EdnsOpt()).model_copy(update={'ecs': ecs})
        return self.model_copy(update={'edns': edns})

    def make_response(
        self,
        addresses: Tuple[IPAddress, ...] = (),
        ttl: int = Limits.DefaultTTL,
        rcode: int = DnsCodes.RCODE_NOERROR,
        ecs: Optional[EcsOption] = None,
        recursion_available: bool = False
    ) -> 'DnsMessage':
        "回应沿用查询的id和question"
        answers = tuple(
            ResourceRecord(name=self.question.qname, rtype=self.question.qtype, ttl=ttl, rdata=address)
            for address in addresses
        )
        edns = None
        if self.edns is not None or ecs is not None:
            payload = self.edns.udp_payload_size if self.edns else Limits.DefaultUdpPayload
            edns = EdnsOpt(udp_payload_size=payload, ecs=ecs)
        return DnsMessage(
            id=self.id,
            is_response=True,
            recursion_desired=self.recursion_desired,
            recursion_available=recursion_available,
            rcode=rcode,
            question=self.question,
            answers=answers,
            edns=edns
        )
