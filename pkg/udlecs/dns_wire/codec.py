import struct
import ipaddress
from typing import List, Optional, Tuple

from pydantic import ValidationError

from udlecs.core import InvalidName, InvalidEcs, Truncated, Malformed, UnsupportedType
from udlecs.constants import DnsCodes, QTYPE_BY_NAME, QTYPE_BY_CODE
from .ecs import ecs_violation
from .schemas import DnsMessage, Question, ResourceRecord, EdnsOpt, EcsOption


# ------------------------------------------------------
# 编码
# 1. 12字节头部 + question + answers + (可选) OPT
# 2. 不输出名称压缩指针
# ------------------------------------------------------

def encode_name(name: str) -> bytes:
    if name.endswith('.') and name != '.':
        name = name[:-1]
    if len(name) > DnsCodes.MAX_NAME_LENGTH:
        raise InvalidName(f'name is {len(name)} octets, limit {DnsCodes.MAX_NAME_LENGTH}', name[:64])
    if name in ('', '.'):
        return b'\x00'
    out = bytearray()
    for label in name.split('.'):
        try:
            raw = label.encode('ascii')
        except UnicodeEncodeError:
            raise InvalidName('non-ASCII label', name)
        if not 1 <= len(raw) <= DnsCodes.MAX_LABEL_LENGTH:
            raise InvalidName(f'label length {len(raw)} outside 1..{DnsCodes.MAX_LABEL_LENGTH}', name)
        out.append(len(raw))
        out += raw
    out.append(0)
    return bytes(out)


def encode_ecs(ecs: EcsOption) -> bytes:
    "ECS RDATA: family, source, scope, 截断后的地址"
    problem = ecs_violation(ecs.family, ecs.source_prefix_len, ecs.scope_prefix_len, ecs.address)
    if problem:
        raise InvalidEcs(problem)
    return struct.pack('!HBB', ecs.family, ecs.source_prefix_len, ecs.scope_prefix_len) + ecs.address


def encode_opt(edns: EdnsOpt) -> bytes:
    rdata = b''
    if edns.ecs is not None:
        option = encode_ecs(edns.ecs)
        rdata = struct.pack('!HH', DnsCodes.OPTION_ECS, len(option)) + option
    # root name, type OPT, class = payload size, ttl = 扩展rcode/版本/flags 全0
    return b'\x00' + struct.pack('!HHIH', DnsCodes.TYPE_OPT, edns.udp_payload_size, 0, len(rdata)) + rdata


def encode_message(msg: DnsMessage) -> bytes:
    flags = 0
    if msg.is_response:
        flags |= 0x8000
    if msg.recursion_desired:
        flags |= 0x0100
    if msg.recursion_available:
        flags |= 0x0080
    flags |= msg.rcode & 0x000F
    arcount = 1 if msg.edns is not None else 0
    out = bytearray(struct.pack('!HHHHHH', msg.id, flags, 1, len(msg.answers), 0, arcount))
    out += encode_name(msg.question.qname)
    out += struct.pack('!HH', QTYPE_BY_NAME[msg.question.qtype], DnsCodes.CLASS_IN)
    for rr in msg.answers:
        out += encode_name(rr.name)
        rdata = rr.rdata.packed
        out += struct.pack('!HHIH', QTYPE_BY_NAME[rr.rtype], DnsCodes.CLASS_IN, rr.ttl, len(rdata))
        out += rdata
    if msg.edns is not None:
        out += encode_opt(msg.edns)
    return bytes(out)


# ------------------------------------------------------
# 解码
# 1. 接受名称压缩指针（只能指向之前的偏移）
# 2. 未知EDNS option忽略，ECS地址必须满足截断规则
# ------------------------------------------------------

class Buffer:
    def __init__(self, data: bytes):
        self.data = data
        self.offset = 0

    def remaining(self) -> int:
        return len(self.data) - self.offset

    def get(self, length: int, field: str) -> bytes:
        if self.remaining() < length:
            raise Truncated(f'buffer ends inside {field}', f'offset {self.offset}')
        chunk = self.data[self.offset:self.offset + length]
        self.offset += length
        return chunk

    def unpack(self, fmt: str, field: str) -> tuple:
        return struct.unpack(fmt, self.get(struct.calcsize(fmt), field))

    def decode_name(self, field: str) -> str:
        labels: List[str] = []
        offset = self.offset
        end_offset = None
        jumps = 0
        total = 0
        while True:
            if offset >= len(self.data):
                raise Truncated(f'buffer ends inside {field}', f'offset {offset}')
            length = self.data[offset]
            kind = length & 0xC0
            if kind == 0xC0:
                if offset + 1 >= len(self.data):
                    raise Truncated(f'buffer ends inside {field} pointer', f'offset {offset}')
                pointer = ((length & 0x3F) << 8) | self.data[offset + 1]
                if pointer >= offset:
                    raise Malformed('compression pointer does not point backwards', f'offset {offset}')
                jumps += 1
                if jumps > DnsCodes.MAX_POINTER_JUMPS:
                    raise Malformed('too many compression pointers', f'offset {offset}')
                if end_offset is None:
                    end_offset = offset + 2
                offset = pointer
                continue
            if kind != 0:
                raise Malformed(f'invalid label length byte 0x{length:02x}', f'offset {offset}')
            offset += 1
            if length == 0:
                break
            if offset + length > len(self.data):
                raise Truncated(f'buffer ends inside {field} label', f'offset {offset}')
            raw = self.data[offset:offset + length]
            try:
                labels.append(raw.decode('ascii').lower())
            except UnicodeDecodeError:
                raise Malformed('non-ASCII label', f'offset {offset}')
            total += length + (1 if len(labels) > 1 else 0)
            if total > DnsCodes.MAX_NAME_LENGTH:
                raise Malformed(f'name longer than {DnsCodes.MAX_NAME_LENGTH} octets', f'offset {offset}')
            offset += length
        self.offset = end_offset if end_offset is not None else offset
        return '.'.join(labels)


def _decode_qtype(code: int, field: str) -> str:
    if code not in QTYPE_BY_CODE:
        raise UnsupportedType(f'type {code} is not supported', field)
    return QTYPE_BY_CODE[code]


def decode_ecs(data: bytes) -> EcsOption:
    if len(data) < 4:
        raise Malformed(f'ECS option is {len(data)} octets, minimum 4', 'ecs')
    family, source, scope = struct.unpack('!HBB', data[:4])
    address = data[4:]
    problem = ecs_violation(family, source, scope, address)
    if problem:
        raise Malformed(problem, 'ecs')
    return EcsOption(family=family, source_prefix_len=source, scope_prefix_len=scope, address=address)


def decode_opt(buffer: Buffer, payload_size: int, rdlength: int) -> EdnsOpt:
    rdata = buffer.get(rdlength, 'OPT rdata')
    ecs: Optional[EcsOption] = None
    offset = 0
    while offset < len(rdata):
        if len(rdata) - offset < 4:
            raise Malformed('trailing octets in OPT rdata', 'OPT')
        code, length = struct.unpack('!HH', rdata[offset:offset + 4])
        offset += 4
        if offset + length > len(rdata):
            raise Malformed(f'option {code} length {length} exceeds OPT rdata', 'OPT')
        if code == DnsCodes.OPTION_ECS:
            if ecs is not None:
                raise Malformed('duplicate ECS option', 'OPT')
            ecs = decode_ecs(rdata[offset:offset + length])
        offset += length
    return EdnsOpt(udp_payload_size=payload_size, ecs=ecs)


def _skip_record(buffer: Buffer, field: str) -> Tuple[int, int, int, int]:
    rtype, rclass, ttl, rdlength = buffer.unpack('!HHIH', field)
    return rtype, rclass, ttl, rdlength


def decode_message(data: bytes) -> DnsMessage:
    buffer = Buffer(data)
    msg_id, flags, qdcount, ancount, nscount, arcount = buffer.unpack('!HHHHHH', 'header')
    if qdcount != 1:
        raise Malformed(f'expected exactly one question, found {qdcount}', 'header')
    qname = buffer.decode_name('question name')
    qtype_code, qclass = buffer.unpack('!HH', 'question')
    qtype = _decode_qtype(qtype_code, 'question')
    if qclass != DnsCodes.CLASS_IN:
        raise UnsupportedType(f'class {qclass} is not supported', 'question')
    answers = []
    for index in range(ancount):
        name = buffer.decode_name(f'answer {index} name')
        rtype_code, rclass, ttl, rdlength = _skip_record(buffer, f'answer {index}')
        rtype = _decode_qtype(rtype_code, f'answer {index}')
        expected = 4 if rtype == 'A' else 16
        if rdlength != expected:
            raise Malformed(f'{rtype} rdata is {rdlength} octets, expected {expected}', f'answer {index}')
        rdata = ipaddress.ip_address(buffer.get(rdlength, f'answer {index} rdata'))
        answers.append(ResourceRecord(name=name, rtype=rtype, ttl=ttl & 0x7FFFFFFF, rdata=rdata))
    for index in range(nscount):
        buffer.decode_name(f'authority {index} name')
        _, _, _, rdlength = _skip_record(buffer, f'authority {index}')
        buffer.get(rdlength, f'authority {index} rdata')
    edns = None
    for index in range(arcount):
        buffer.decode_name(f'additional {index} name')
        rtype_code, rclass, _, rdlength = _skip_record(buffer, f'additional {index}')
        if rtype_code == DnsCodes.TYPE_OPT:
            if edns is not None:
                raise Malformed('more than one OPT record', f'additional {index}')
            edns = decode_opt(buffer, rclass, rdlength)
            if not flags & 0x8000 and edns.ecs is not None and edns.ecs.scope_prefix_len != 0:
                raise InvalidEcs(f'query carries scope {edns.ecs.scope_prefix_len}, must be 0', f'additional {index}')
        else:
            buffer.get(rdlength, f'additional {index} rdata')
    try:
        return DnsMessage(
            id=msg_id,
            is_response=bool(flags & 0x8000),
            recursion_desired=bool(flags & 0x0100),
            recursion_available=bool(flags & 0x0080),
            rcode=flags & 0x000F,
            question=Question(qname=qname, qtype=qtype),
            answers=tuple(answers),
            edns=edns
        )
    except ValidationError as e:
        raise Malformed(e.errors()[0]["msg"], "message")
