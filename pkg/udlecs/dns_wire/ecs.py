import math
from typing import Optional

from udlecs.constants import FAMILY_MAX_PREFIX
from udlecs.utils import IPAddress


def truncate_to_prefix(address: IPAddress, prefix_len: int) -> bytes:
    "前 ceil(prefix_len/8) 个字节，多余的位置0"
    max_len = 32 if address.version == 4 else 128
    if not 0 <= prefix_len <= max_len:
        raise ValueError(f'prefix length {prefix_len} out of range for IPv{address.version}')
    length = math.ceil(prefix_len / 8)
    packed = bytearray(address.packed[:length])
    spare_bits = length * 8 - prefix_len
    if spare_bits:
        packed[-1] &= (0xFF << spare_bits) & 0xFF
    return bytes(packed)


def ecs_violation(family: int, source_prefix_len: int, scope_prefix_len: int, address: bytes) -> Optional[str]:
    "检查ECS字段是否满足截断规则，返回问题描述，满足时返回None"
    if family not in FAMILY_MAX_PREFIX:
        return f'unknown family {family}'
    max_len = FAMILY_MAX_PREFIX[family]
    if source_prefix_len > max_len:
        return f'source prefix length {source_prefix_len} exceeds {max_len}'
    if scope_prefix_len > max_len:
        return f'scope prefix length {scope_prefix_len} exceeds {max_len}'
    expected = math.ceil(source_prefix_len / 8)
    if len(address) != expected:
        return f'address has {len(address)} octets, expected {expected} for /{source_prefix_len}'
    spare_bits = expected * 8 - source_prefix_len
    if spare_bits and address[-1] & ((1 << spare_bits) - 1):
        return f'address has non-zero bits beyond /{source_prefix_len}'
    return None
