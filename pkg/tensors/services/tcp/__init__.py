from .tcp_service import TcpService

__all__ = ["TcpService"]
