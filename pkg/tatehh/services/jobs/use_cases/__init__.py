from .demo import DemoS3Service
from .dims import DimsService, TateService
from .oracle import OracleCheckService, oracle_checks
from .props import PropsService
from .ring import RingService, VerifyService, read_relations

__all__ = [
    "DemoS3Service",
    "DimsService",
    "OracleCheckService",
    "PropsService",
    "RingService",
    "TateService",
    "VerifyService",
    "oracle_checks",
    "read_relations",
]
