import ipaddress
from functools import lru_cache
from typing import Dict, Tuple, Union, Optional

from pydantic import BaseModel, ConfigDict, Field

from udlecs.constants import Limits
from udlecs.utils import PrefixTrie, IPNetwork


IPAddressField = Union[ipaddress.IPv4Address, ipaddress.IPv6Address]
IPNetworkField = Union[ipaddress.IPv4Network, ipaddress.IPv6Network]


class LocationPrefixMap(BaseModel):
    """地区代码 -> 前缀，前缀两两不重叠，构造请使用 build_prefix_map / make_prefix_map"""
    model_config = ConfigDict(frozen=True)

    entries: Dict[str, IPNetworkField] = Field(default_factory=dict)

    @property
    def regions(self) -> Tuple[str, ...]:
        return tuple(sorted(self.entries))

    def region_of(self, address: IPAddressField) -> Optional[str]:
        "地址所在的地区，不在任何前缀内时返回None"
        for region, network in self.entries.items():
            if address.version == network.version and address in network:
                return region
        return None


class RegionalAnswer(BaseModel):
    model_config = ConfigDict(frozen=True)

    prefix: IPNetworkField
    addresses: Tuple[IPAddressField, ...] = Field(min_length=1)
    ttl: int = Field(default=Limits.DefaultTTL, ge=0)
    region: Optional[str] = None


class QnameRecords(BaseModel):
    model_config = ConfigDict(frozen=True)

    answers: Tuple[RegionalAnswer, ...] = ()
    default: Tuple[IPAddressField, ...] = ()
    ttl: int = Field(default=Limits.DefaultTTL, ge=0)

    def longest_match(self, network: IPNetwork) -> Optional[Tuple[IPNetwork, RegionalAnswer]]:
        return _build_tries(self)[network.version].longest_match(network)


class GeoZone(BaseModel):
    model_config = ConfigDict(frozen=True)

    origin: str = ''
    regions: LocationPrefixMap = Field(default_factory=LocationPrefixMap)
    records: Dict[str, QnameRecords] = Field(default_factory=dict)

    @property
    def qnames(self) -> Tuple[str, ...]:
        return tuple(sorted(self.records))


# ------------------------------------------------------
# zone 文件的文档结构
# answers 的 key 是 regions 中的地区代码或 CIDR 字符串
# value 是地址列表，或 {"addresses": [...], "ttl": 60}
# ------------------------------------------------------

class AnswerDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    addresses: Tuple[str, ...] = Field(min_length=1)
    ttl: Optional[int] = Field(default=None, ge=0)


class RecordDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    ttl: int = Field(default=Limits.DefaultTTL, ge=0)
    answers: Dict[str, Union[Tuple[str, ...], AnswerDocument]] = Field(default_factory=dict)
    default: Optional[Tuple[str, ...]] = None


class ZoneDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    origin: str = ''
    regions: Dict[str, str] = Field(default_factory=dict)
    records: Dict[str, RecordDocument] = Field(default_factory=dict)


@lru_cache(maxsize=1024)
def _build_tries(records: QnameRecords) -> Dict[int, PrefixTrie]:
    # QnameRecords 不可变，同一份记录只建一次前缀树
    tries = {4: PrefixTrie(4), 6: PrefixTrie(6)}
    for answer in records.answers:
        tries[answer.prefix.version].insert(answer.prefix, answer)
    return tries
