from .schemas import (
    DeviceConfig,
    ForwardPolicy,
    StripPolicy,
    RewritePolicy,
    ResolverPolicy,
    CacheEntry,
    Hop,
    ScenarioTranscript,
    ForwardProbe,
    ScenarioDocument
)
from .device import make_device, validate_device, stub_query, host_address
from .policy import apply_policy, parse_policy, preset_policy, default_rewrite_policy
from .cache import VirtualClock, ScopeCache
from .authoritative import Authoritative
from .transport import Channel, InProcessChannel, UdpChannel, UdpAuthoritativeServer
from .resolver import ResolverState, resolve, cache_lookup
from .scenario import (
    run_scenario,
    run_scenario_file,
    probe_ecs_forwarding,
    load_scenario,
    transcript_frame,
    transcript_csv
)

__all__ = [
    'DeviceConfig',
    'ForwardPolicy',
    'StripPolicy',
    'RewritePolicy',
    'ResolverPolicy',
    'CacheEntry',
    'Hop',
    'ScenarioTranscript',
    'ForwardProbe',
    'ScenarioDocument',
    'make_device',
    'validate_device',
    'stub_query',
    'host_address',
    'apply_policy',
    'parse_policy',
    'preset_policy',
    'default_rewrite_policy',
    'VirtualClock',
    'ScopeCache',
    'Authoritative',
    'Channel',
    'InProcessChannel',
    'UdpChannel',
    'UdpAuthoritativeServer',
    'ResolverState',
    'resolve',
    'cache_lookup',
    'run_scenario',
    'run_scenario_file',
    'probe_ecs_forwarding',
    'load_scenario',
    'transcript_frame',
    'transcript_csv'
]
