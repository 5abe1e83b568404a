from .time_utils import TimeUtils
from .json_utils import JsonUtils
from .set_utils import SetUtils
from .string_utils import StringUtils
from .prefix_utils import PrefixUtils, PrefixTrie, IPAddress, IPNetwork

__all__ = [
    'TimeUtils',
    'JsonUtils',
    'SetUtils',
    'StringUtils',
    'PrefixUtils',
    'PrefixTrie',
    'IPAddress',
    'IPNetwork'
]
