from datetime import datetime, timezone


class TimeUtils:
    """时间相关工具函数集合"""
    @staticmethod
    def timestamp_ms() -> int:
        """
        获取当前 UTC 时间戳（毫秒）
        """
        return int(datetime.now(timezone.utc).timestamp() * 1000)

    @staticmethod
    def now_iso() -> str:
        """
        获取当前时间（ISO 8601 格式，当前时区）
        """
        return datetime.now().isoformat(timespec="seconds")

    @staticmethod
    def date_of(iso_time: str) -> str:
        "日志按日期分文件: YYYY-MM-DD"
        return iso_time[:10]
