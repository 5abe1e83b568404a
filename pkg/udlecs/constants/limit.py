class Limits:
    DefaultTTL = 300
    DefaultUdpPayload = 1232
    DefaultPoolThreshold = 3
    DefaultRewritePrefixV4 = 24
    DefaultRewritePrefixV6 = 56
    # 设备/解析器地址在所属地区前缀内的主机偏移
    DeviceHostOffset = 1
    ResolverHostOffset = 53
