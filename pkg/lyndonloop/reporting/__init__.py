from .report import ReportBuilder, VerificationReport  # noqa
from .workers import parallel_map, worker_count  # noqa
