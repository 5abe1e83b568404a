# 公共解析器是否转发客户端携带的ECS
# forward: 原样转发  strip: 删除ECS
ResolverPresets = {
    'google': 'forward',
    'quad9': 'forward',
    'cloudflare': 'strip',
    'opendns': 'strip',
    'yandex': 'strip',
    'comodo': 'forward',
    'verisign': 'forward',
    'alternate': 'forward',
    'adguard': 'forward',
    'uncensoreddns': 'forward',
    'ultrarecursive': 'forward',
    'dnswatch': 'forward',
    'neustar': 'forward'
}

# 转发测试使用的ECS
ProbeSubnet = '111.111.111.0/24'
