import ipaddress
from fractions import Fraction
from typing import FrozenSet, NamedTuple, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator


IPAddressField = Union[ipaddress.IPv4Address, ipaddress.IPv6Address]


class CaptureRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    timestamp: int = Field(ge=0)
    device_id: str = Field(min_length=1)
    ip_based_location: str = Field(pattern=r'^[A-Z]{2}$')
    user_defined_location: str = Field(pattern=r'^[A-Z]{2}$')
    qname: str = Field(min_length=1)
    resolved_ips: Tuple[IPAddressField, ...] = ()

    @field_validator('qname')
    @classmethod
    def normalize_qname(cls, value: str) -> str:
        value = value.strip().lower()
        return value[:-1] if value.endswith('.') else value


class CaptureLog(BaseModel):
    '''按时间排序的请求记录

    resorted: 输入时间戳不是非递减的，已自动排序
    '''
    model_config = ConfigDict(frozen=True)

    records: Tuple[CaptureRecord, ...] = ()
    resorted: bool = False
    source: str = ''

    @property
    def devices(self) -> Tuple[str, ...]:
        return tuple(sorted({record.device_id for record in self.records}))

    @property
    def warnings(self) -> Tuple[str, ...]:
        if self.resorted:
            return (f'NonMonotonicTime: {self.source or "log"} was sorted by timestamp',)
        return ()


class DomainSet(BaseModel):
    """
    members: 域名或域名池模式(某一个标签为 prefix[min-max])
    concrete: members 覆盖的原始域名
    """
    model_config = ConfigDict(frozen=True)

    members: FrozenSet[str] = frozenset()
    concrete: FrozenSet[str] = frozenset()

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, name: str) -> bool:
        return name in self.members

    def sorted(self) -> Tuple[str, ...]:
        return tuple(sorted(self.members))


class CountPoint(NamedTuple):
    bucket_end: int
    unique_domains: int
    unique_ips: int


class ImpactRow(NamedTuple):
    device_id: str
    uds_first: Fraction
    uds_second: Fraction
    ipbs_first: Fraction
    ipbs_second: Fraction
    max_domains: int


class SynthProfile(BaseModel):
    "合成数据的规模"
    model_config = ConfigDict(frozen=True)

    devices: int = Field(default=8, ge=1)
    regions: Tuple[str, ...] = ('HK', 'UK', 'US')
    days: int = Field(default=7, ge=1)
    requests_per_day: int = Field(default=3, ge=1)
    start: int = Field(default=1700006400, ge=0)


Window = Optional[Tuple[int, int]]
