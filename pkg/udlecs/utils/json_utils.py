import os
import json
import hashlib
import tempfile
from typing import Any


class JsonUtils:
    """
    负责读取和写入结构化文本文件
    """
    @staticmethod
    def read_text(file_path: str) -> str:
        """读取文本文件"""
        with open(file_path, "r", encoding="utf-8") as f:
            return f.read()

    @staticmethod
    def dumps(data: Any) -> str:
        """稳定的key顺序，保证相同输入得到逐字节相同的输出"""
        return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def write_text(file_path: str, text: str) -> None:
        """先写入临时文件再替换，失败时不留下残缺的输出"""
        directory = os.path.dirname(os.path.abspath(file_path))
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            os.replace(tmp_path, file_path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise

    @staticmethod
    def write(file_path: str, data: Any) -> None:
        """写入json文件数据"""
        JsonUtils.write_text(file_path, JsonUtils.dumps(data))

    @staticmethod
    def digest(file_path: str) -> str:
        """输入文件的sha256摘要"""
        sha = hashlib.sha256()
        with open(file_path, "rb") as f:
            for chunk in iter(lambda: f.read(65536), b""):
                sha.update(chunk)
        return sha.hexdigest()
