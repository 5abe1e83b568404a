from typing import Iterable, Optional, Sequence, Union

from udlecs.core import EmptyDomainSet, MixedDevices
from udlecs.traffic import DomainSet
from .schemas import Ace, AceTemplate, MudFile


def generate_mud(
    ds: Union[DomainSet, Iterable[str]],
    device_id: str,
    template: Optional[AceTemplate] = None,
    mud_url: str = ''
) -> MudFile:
    "每个域名一条允许规则"
    members = ds.members if isinstance(ds, DomainSet) else set(ds)
    if not members:
        raise EmptyDomainSet('cannot generate a MUD file from an empty domain set', device_id)
    template = template or AceTemplate()
    return MudFile(
        device_id=device_id,
        mud_url=mud_url,
        acl=tuple(Ace.from_template(name, template) for name in sorted(members))
    )


def unify(muds: Sequence[MudFile]) -> MudFile:
    "ACE的并集，mud_url 取各文件中最小的，与输入顺序无关"
    if not muds:
        raise EmptyDomainSet('nothing to unify')
    devices = sorted({mud.device_id for mud in muds})
    if len(devices) > 1:
        raise MixedDevices(f'MUD files belong to different devices: {", ".join(devices)}')
    return MudFile(
        device_id=muds[0].device_id,
        mud_url=min(mud.mud_url for mud in muds),
        acl=tuple(ace for mud in muds for ace in mud.acl)
    )


def domain_count(mud: MudFile) -> int:
    "不同的域名端点数量，IP/MAC 端点不计入"
    return len(mud.domains)
