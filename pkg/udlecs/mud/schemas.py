import re
import ipaddress
from typing import Annotated, Dict, List, Literal, NamedTuple, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


MAC_PATTERN = re.compile(r'^[0-9a-f]{2}(:[0-9a-f]{2}){5}$')

Port = Annotated[int, Field(ge=0, le=65535)]
EndpointKind = Literal['domain', 'ip', 'mac']
Protocol = Literal['tcp', 'udp', 'icmp', 'any']
Direction = Literal['to_device', 'from_device']
Action = Literal['accept', 'drop']


class AceTemplate(BaseModel):
    "generate_mud 使用的ACE模板，默认 TCP / 源端口ANY / 目的端口443 / 设备发出 / 允许"
    model_config = ConfigDict(frozen=True)

    protocol: Protocol = 'tcp'
    source_port: Optional[Port] = None
    destination_port: Optional[Port] = 443
    direction: Direction = 'from_device'
    action: Action = 'accept'


class Ace(BaseModel):
    '''
    ACE = (legitimate_endpoint, protocol, source_port, destination_port, direction) + action
    端口为None表示ANY
    '''
    model_config = ConfigDict(frozen=True)

    endpoint: str = Field(min_length=1)
    endpoint_kind: EndpointKind = 'domain'
    protocol: Protocol = 'tcp'
    source_port: Optional[Port] = None
    destination_port: Optional[Port] = None
    direction: Direction = 'from_device'
    action: Action = 'accept'

    @model_validator(mode='after')
    def check_endpoint(self) -> 'Ace':
        if self.endpoint != self.endpoint.strip().lower() or ' ' in self.endpoint:
            raise ValueError(f'endpoint {self.endpoint!r} must be lowercase without spaces')
        if self.endpoint_kind == 'ip':
            ipaddress.ip_address(self.endpoint)
        elif self.endpoint_kind == 'mac' and not MAC_PATTERN.fullmatch(self.endpoint):
            raise ValueError(f'endpoint {self.endpoint!r} is not a MAC address')
        if self.protocol == 'icmp' and (self.source_port is not None or self.destination_port is not None):
            raise ValueError('icmp entries carry ANY ports')
        return self

    @classmethod
    def from_template(cls, endpoint: str, template: AceTemplate, endpoint_kind: EndpointKind = 'domain') -> 'Ace':
        return cls(endpoint=endpoint, endpoint_kind=endpoint_kind, **template.model_dump())

    @property
    def sort_key(self) -> tuple:
        # ANY 排在所有具体端口之前
        return (
            self.endpoint,
            self.protocol,
            self.direction,
            -1 if self.source_port is None else self.source_port,
            -1 if self.destination_port is None else self.destination_port,
            self.endpoint_kind,
            self.action
        )

    @property
    def rule(self) -> tuple:
        "除 endpoint 外的元组"
        return (self.protocol, self.source_port, self.destination_port, self.direction, self.action)


def default_mud_url(device_id: str) -> str:
    return f'https://mud.udlecs.test/{device_id}.json'


def canonical_acl(aces) -> Tuple[Ace, ...]:
    return tuple(sorted(set(aces), key=lambda ace: ace.sort_key))


class MudFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    device_id: str = Field(min_length=1)
    mud_url: str = ''
    acl: Tuple[Ace, ...] = ()
    default_action: Literal['drop'] = 'drop'

    @field_validator('acl')
    @classmethod
    def canonicalize(cls, value: Tuple[Ace, ...]) -> Tuple[Ace, ...]:
        return canonical_acl(value)

    @model_validator(mode='before')
    @classmethod
    def fill_mud_url(cls, data):
        if isinstance(data, dict) and not data.get('mud_url') and data.get('device_id'):
            data = {**data, 'mud_url': default_mud_url(data['device_id'])}
        return data

    @property
    def domains(self) -> Tuple[str, ...]:
        return tuple(sorted({ace.endpoint for ace in self.acl if ace.endpoint_kind == 'domain'}))


class RegionDomainGroup(BaseModel):
    "同一服务在不同地区使用的域名"
    model_config = ConfigDict(frozen=True)

    canonical_domain: str = Field(min_length=1)
    regional_variants: Dict[str, str] = Field(min_length=1)

    @field_validator('canonical_domain')
    @classmethod
    def normalize_canonical(cls, value: str) -> str:
        return value.strip().lower().rstrip('.')

    @field_validator('regional_variants')
    @classmethod
    def check_variants(cls, value: Dict[str, str]) -> Dict[str, str]:
        normalized = {region: name.strip().lower().rstrip('.') for region, name in value.items()}
        for region in normalized:
            if not re.fullmatch(r'[A-Z]{2}', region):
                raise ValueError(f'region code {region!r} must be two uppercase letters')
        if len(set(normalized.values())) != len(normalized):
            raise ValueError('regional variants must be pairwise distinct')
        return dict(sorted(normalized.items()))


class CollapseReport(NamedTuple):
    # (canonical_domain, region, variant)
    unmatched: Tuple[Tuple[str, str, str], ...]
    # (canonical_domain, 不同元组的数量)
    splits: Tuple[Tuple[str, int], ...]


class SweepRow(NamedTuple):
    locations_included: int
    unified_domains: int
    ecs_domains: int
    ratio: object


# ------------------------------------------------------
# MUD 文档结构(参照 RFC 8520 的 ACL/ACE 嵌套)
# ------------------------------------------------------

PortDocument = Union[Literal['any'], Port]


class EndpointDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    kind: EndpointKind
    value: str


class MatchesDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    legitimate_endpoint: EndpointDocument
    protocol: Protocol
    source_port: PortDocument
    destination_port: PortDocument
    direction: Direction


class ActionsDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    forwarding: Action


class AceDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    name: str
    matches: MatchesDocument
    actions: ActionsDocument


class AceListDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    ace: List[AceDocument] = Field(default_factory=list)


class AclDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    name: str
    aces: AceListDocument


class AclsDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    acl: List[AclDocument] = Field(default_factory=list)


class MudHeaderDocument(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    mud_version: Literal[1] = Field(default=1, alias='mud-version')
    mud_url: str = Field(alias='mud-url')
    device_id: str = Field(alias='device-id')
    default_action: Literal['drop'] = Field(default='drop', alias='default-action')


class MudDocument(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    mud: MudHeaderDocument = Field(alias='ietf-mud:mud')
    acls: AclsDocument = Field(alias='ietf-access-control-list:acls')


class GroupsDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    groups: List[RegionDomainGroup] = Field(default_factory=list)
