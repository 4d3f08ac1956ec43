"""
Plucker - Scan Workers
Fans independent work units out over processes; results come back in
input order, so the caller's merge is schedule-independent
"""
from concurrent.futures import ProcessPoolExecutor

from utils.helpers import log


def run_units(func, units, jobs=1):
    """
    Apply func to every unit

    Args:
        func: Module-level callable (must pickle for jobs > 1)
        units: List of work units
        jobs: Worker processes; 1 runs in-process

    Returns:
        list of results, aligned with units
    """
    units = list(units)
    if jobs <= 1 or len(units) < 2:
        return [func(unit) for unit in units]

    chunksize = max(1, len(units) // (jobs * 4))
    log(f"   Fanning {len(units)} units over {jobs} workers (chunks of {chunksize})")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, units, chunksize=chunksize))
