import socket
import ipaddress
import threading
import socketserver
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from udlecs.core import ToolkitError, toolkit_logger
from udlecs.utils import IPAddress
from .authoritative import Authoritative


UDP_TIMEOUT = 2
MAX_UDP_SIZE = 65535


class Channel(ABC):
    "解析器到权威服务器的传输通道"
    @abstractmethod
    def exchange(self, data: bytes) -> bytes:
        ...


class InProcessChannel(Channel):
    """进程内直接调用，source 是权威服务器看到的请求来源地址"""
    def __init__(self, authoritative: Authoritative, source: Optional[IPAddress] = None):
        self.authoritative = authoritative
        self.source = source

    def exchange(self, data: bytes) -> bytes:
        return self.authoritative.handle(data, self.source)


class UdpChannel(Channel):
    def __init__(self, address: Tuple[str, int], timeout: float = UDP_TIMEOUT):
        self.address = address
        self.timeout = timeout

    def exchange(self, data: bytes) -> bytes:
        with socket.socket(socket.AF_INET, socket.SOCK_DGRAM) as sock:
            sock.settimeout(self.timeout)
            sock.sendto(data, self.address)
            response, _ = sock.recvfrom(MAX_UDP_SIZE)
        return response


class AuthoritativeUdpHandler(socketserver.BaseRequestHandler):
    def handle(self):
        data, sock = self.request
        source = ipaddress.ip_address(self.client_address[0])
        try:
            # 权威服务器的状态只在锁内访问
            with self.server.lock:
                response = self.server.authoritative.handle(data, source)
        except ToolkitError as e:
            toolkit_logger.warning(f'Drop query from {self.client_address[0]}: {e}')
            return
        sock.sendto(response, self.client_address)


class UdpAuthoritativeServer(socketserver.ThreadingUDPServer):
    """
    在本机UDP端口上运行权威服务器，仅用于测试
    port=0 时由系统分配端口
    """
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, authoritative: Authoritative, host: str = '127.0.0.1', port: int = 0):
        self.authoritative = authoritative
        self.lock = threading.Lock()
        self._thread: Optional[threading.Thread] = None
        super().__init__((host, port), AuthoritativeUdpHandler)

    def start(self) -> 'UdpAuthoritativeServer':
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()
        return self

    def stop(self) -> None:
        self.shutdown()
        self.server_close()
        if self._thread is not None:
            self._thread.join(timeout=UDP_TIMEOUT)

    def channel(self) -> UdpChannel:
        return UdpChannel(self.server_address[:2])

    def __enter__(self) -> 'UdpAuthoritativeServer':
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()
