import ipaddress

from udlecs.core import InvalidDevice
from udlecs.constants import Limits
from udlecs.dns_wire import DnsMessage, EcsOption, QType
from udlecs.geo_zone import LocationPrefixMap, region_to_prefix
from udlecs.utils import IPAddress
from .schemas import DeviceConfig


def host_address(prefix_map: LocationPrefixMap, region: str, host: int) -> IPAddress:
    "地区前缀内的第host个地址"
    network = region_to_prefix(prefix_map, region)
    if not 0 <= host < network.num_addresses:
        raise InvalidDevice(f'host offset {host} is outside {network}', region)
    return network.network_address + host


def make_device(
    device_id: str,
    ip_based_location: str,
    user_defined_location: str,
    prefix_map: LocationPrefixMap,
    host: int = Limits.DeviceHostOffset
) -> DeviceConfig:
    return DeviceConfig(
        device_id=device_id,
        ip_based_location=ip_based_location,
        user_defined_location=user_defined_location,
        client_address=host_address(prefix_map, ip_based_location, host)
    )


def validate_device(cfg: DeviceConfig, prefix_map: LocationPrefixMap) -> DeviceConfig:
    "client_address 必须位于 ip_based_location 的前缀内"
    network = region_to_prefix(prefix_map, cfg.ip_based_location)
    if cfg.client_address.version != network.version or cfg.client_address not in network:
        raise InvalidDevice(
            f'client address {cfg.client_address} is outside {cfg.ip_based_location} prefix {network}',
            cfg.device_id
        )
    return cfg


def stub_query(
    cfg: DeviceConfig,
    qname: str,
    prefix_map: LocationPrefixMap,
    qtype: QType = 'A',
    id: int = 0
) -> DnsMessage:
    """
    存根解析器发起查询，ECS 携带用户选择地区的前缀而不是设备自身的地址
    """
    network = region_to_prefix(prefix_map, cfg.user_defined_location)
    ecs = EcsOption.from_network(network)
    return DnsMessage.make_query(qname, qtype=qtype, ecs=ecs, id=id)


def parse_client_address(text: str) -> IPAddress:
    try:
        return ipaddress.ip_address(text)
    except ValueError as e:
        raise InvalidDevice(str(e), 'client_address')
