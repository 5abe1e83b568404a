import random
import ipaddress
from typing import List, Optional

from udlecs.core import toolkit_logger
from .schemas import CaptureLog, CaptureRecord, SynthProfile


DAY = 86400
# 设备对地区的依赖方式
DEVICE_KINDS = ('static', 'regional', 'geo_cdn', 'pooled')


def _churn_address(rng: random.Random) -> ipaddress.IPv4Address:
    # 198.18.0.0/15 中的地址，每天重新解析时变化
    return ipaddress.IPv4Address(int(ipaddress.IPv4Address('198.18.0.0')) + rng.randrange(1, 2 ** 17 - 1))


def _device_domains(kind: str, service: str, ipl: str, udl: str, pool: List[int]) -> List[str]:
    domains = [f'time.{service}.example', f'api.{service}.example']
    if kind == 'regional':
        domains[1] = f'api.{udl.lower()}.{service}.example'
    elif kind == 'geo_cdn':
        domains.append(f'cdn-{ipl.lower()}.{service}.example')
    elif kind == 'pooled':
        domains.extend(f'front{n}.{udl.lower()}.{service}.example' for n in pool)
    return domains


def synthesize_log(seed: int = 0, profile: Optional[SynthProfile] = None) -> CaptureLog:
    """
    生成合成的请求记录
    1. 每个设备在所有 (ℓ, ℓ′) 组合下运行 profile.days 天
    2. 域名集合取决于设备类型和地区，解析得到的IP每天变化
    """
    profile = profile or SynthProfile()
    rng = random.Random(seed)
    records: List[CaptureRecord] = []
    for number in range(profile.devices):
        kind = DEVICE_KINDS[number % len(DEVICE_KINDS)]
        device_id = f'dev{number:02d}-{kind}'
        service = f'svc{number:02d}'
        pool_start = rng.randrange(1, 50)
        pool = list(range(pool_start, pool_start + rng.randrange(3, 6)))
        for ipl in profile.regions:
            for udl in profile.regions:
                domains = _device_domains(kind, service, ipl, udl, pool)
                for day in range(profile.days):
                    addresses = {domain: _churn_address(rng) for domain in domains}
                    # 第一天请求全部域名，之后每天轮流请求其中几个
                    if day == 0:
                        requested = domains
                    else:
                        requested = [
                            domains[(day * profile.requests_per_day + i) % len(domains)]
                            for i in range(profile.requests_per_day)
                        ]
                    for domain in requested:
                        records.append(CaptureRecord(
                            timestamp=profile.start + day * DAY + rng.randrange(0, DAY),
                            device_id=device_id,
                            ip_based_location=ipl,
                            user_defined_location=udl,
                            qname=domain,
                            resolved_ips=(addresses[domain],)
                        ))
    records.sort(key=lambda record: (record.timestamp, record.device_id, record.qname))
    toolkit_logger.info(f'Synthesized {len(records)} records for {profile.devices} devices (seed {seed})')
    return CaptureLog(records=tuple(records), source=f'synthetic:{seed}')
