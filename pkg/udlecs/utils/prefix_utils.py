import ipaddress
from typing import Generic, TypeVar, Optional, Tuple, Union, Iterator


IPAddress = Union[ipaddress.IPv4Address, ipaddress.IPv6Address]
IPNetwork = Union[ipaddress.IPv4Network, ipaddress.IPv6Network]

T = TypeVar('T')


class PrefixUtils:
    @staticmethod
    def network_of(address: IPAddress, prefix_len: int) -> IPNetwork:
        "地址截断到前缀后得到的网络"
        return ipaddress.ip_network(f'{address}/{prefix_len}', strict=False)

    @staticmethod
    def parse_network(text: str) -> IPNetwork:
        "解析CIDR字符串，主机位必须为0"
        return ipaddress.ip_network(text, strict=True)

    @staticmethod
    def family_of(address: Union[IPAddress, IPNetwork]) -> int:
        return 1 if address.version == 4 else 2


class _Node:
    __slots__ = ('left', 'right', 'network', 'value')

    def __init__(self):
        self.left = None
        self.right = None
        self.network = None
        self.value = None


class PrefixTrie(Generic[T]):
    """单一地址族的二叉前缀树，用于最长前缀匹配"""

    def __init__(self, version: int = 4):
        self.version = version
        self.max_length = 32 if version == 4 else 128
        self.root = _Node()
        self.size = 0

    def _bits(self, network: IPNetwork) -> Iterator[int]:
        value = int(network.network_address)
        for i in range(network.prefixlen):
            yield (value >> (self.max_length - 1 - i)) & 1

    def insert(self, network: IPNetwork, value: T) -> bool:
        "插入前缀，已存在时返回False且不覆盖"
        if network.version != self.version:
            raise ValueError(f'address family mismatch: {network}')
        node = self.root
        for bit in self._bits(network):
            if bit:
                if node.right is None:
                    node.right = _Node()
                node = node.right
            else:
                if node.left is None:
                    node.left = _Node()
                node = node.left
        if node.network is not None:
            return False
        node.network = network
        node.value = value
        self.size += 1
        return True

    def longest_match(self, network: IPNetwork) -> Optional[Tuple[IPNetwork, T]]:
        "返回包含network的最长前缀；比network更具体的前缀不参与匹配"
        if network.version != self.version:
            return None
        node = self.root
        best = None
        if node.network is not None:
            best = (node.network, node.value)
        for bit in self._bits(network):
            node = node.right if bit else node.left
            if node is None:
                break
            if node.network is not None:
                best = (node.network, node.value)
        return best

    def __len__(self) -> int:
        return self.size
