import logging
import os
from concurrent.futures import ProcessPoolExecutor

from tqdm.auto import tqdm

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

WORKERS_ENV = "LYNDONLOOP_WORKERS"


def worker_count(workers=None) -> int:
    """
    Effective size of the worker pool

    Parameters
    ----------
    workers : int, optional
        Explicit worker count. If None the `LYNDONLOOP_WORKERS` environment
        variable is read, defaulting to 1.
    """
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "1").strip() or "1"
        try:
            workers = int(raw)
        except ValueError:
            raise ConfigurationError(
                "{0} must be a positive integer, got {1!r}".format(WORKERS_ENV, raw)
            )
    if workers < 1:
        raise ConfigurationError("The worker count must be at least 1")
    return workers


def parallel_map(func, items, workers=None, progress: bool = False, desc=None) -> list:
    """
    Maps `func` over `items`, keeping the input order

    A process pool is used when more than one worker is configured, in which
    case `func` and the items must be picklable.
    """
    items = list(items)
    n_workers = min(worker_count(workers), max(len(items), 1))
    if n_workers <= 1:
        return [func(x) for x in tqdm(items, desc=desc, disable=not progress)]

    logger.debug("Running %d tasks on %d workers", len(items), n_workers)
    with ProcessPoolExecutor(max_workers=n_workers) as executor:
        return list(
            tqdm(
                executor.map(func, items),
                total=len(items),
                desc=desc,
                disable=not progress,
            )
        )
