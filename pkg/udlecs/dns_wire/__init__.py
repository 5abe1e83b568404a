from .schemas import (
    DnsMessage,
    Question,
    ResourceRecord,
    EdnsOpt,
    EcsOption,
    QType,
    canonical_name
)
from .ecs import truncate_to_prefix, ecs_violation
from .codec import encode_message, decode_message, encode_ecs, decode_ecs, encode_name

__all__ = [
    'DnsMessage',
    'Question',
    'ResourceRecord',
    'EdnsOpt',
    'EcsOption',
    'QType',
    'canonical_name',
    'truncate_to_prefix',
    'ecs_violation',
    'encode_message',
    'decode_message',
    'encode_ecs',
    'decode_ecs',
    'encode_name'
]
