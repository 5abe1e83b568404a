from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from udlecs.utils import StringUtils
from .schemas import CountPoint, ImpactRow
from .similarity import empirical_cdf


def _decimal(value: Fraction) -> str:
    return StringUtils.fraction_to_decimal(value)


def to_csv(frame: pd.DataFrame, index: bool = False) -> str:
    return frame.to_csv(index=index, lineterminator='\n')


def similarity_frame(name: str, value: Fraction, **labels: str) -> pd.DataFrame:
    "单个 uds/ipbs 结果"
    row = dict(labels)
    row[name] = _decimal(value)
    return pd.DataFrame([row])


def matrix_frame(regions: Sequence[str], matrix: List[List[Fraction]]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [[_decimal(value) for value in row] for row in matrix],
        index=pd.Index(list(regions), name='region'),
        columns=list(regions)
    )
    return frame


def series_frame(points: List[CountPoint]) -> pd.DataFrame:
    return pd.DataFrame(points, columns=list(CountPoint._fields))


def stabilization_frame(device: str, ip_based_location: str, user_defined_location: str, value: Optional[int]) -> pd.DataFrame:
    return pd.DataFrame([{
        'device_id': device,
        'ip_based_location': ip_based_location,
        'user_defined_location': user_defined_location,
        'stabilization_time': '' if value is None else value
    }])


def impact_frame(rows: List[ImpactRow], first: str, second: str) -> pd.DataFrame:
    columns = [
        'device_id',
        f'uds_{first}', f'uds_{second}',
        f'ipbs_{first}', f'ipbs_{second}',
        'max_domains'
    ]
    data = [
        [
            row.device_id,
            _decimal(row.uds_first), _decimal(row.uds_second),
            _decimal(row.ipbs_first), _decimal(row.ipbs_second),
            row.max_domains
        ]
        for row in rows
    ]
    return pd.DataFrame(data, columns=columns)


def impact_cdf_frame(rows: List[ImpactRow], first: str, second: str) -> pd.DataFrame:
    "每个指标在所有设备上的经验分布"
    metrics = {
        f'uds_{first}': [row.uds_first for row in rows],
        f'uds_{second}': [row.uds_second for row in rows],
        f'ipbs_{first}': [row.ipbs_first for row in rows],
        f'ipbs_{second}': [row.ipbs_second for row in rows]
    }
    data = []
    for metric, values in metrics.items():
        for value, fraction in empirical_cdf(values):
            data.append((metric, _decimal(value), _decimal(fraction)))
    return pd.DataFrame(data, columns=['metric', 'value', 'cumulative_fraction'])
