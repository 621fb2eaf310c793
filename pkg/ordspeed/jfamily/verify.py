from joblib import Parallel, delayed
from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import is_irreducible
from ordspeed.enumeration import graph_from_pattern
from ordspeed.exceptions import InputError
from ordspeed.jfamily.identify import j_identify, small_subgraph_test
from ordspeed.jfamily.schemas import P3P4Summary

logger: BoundLogger = get_logger()

CHUNK = 4096


def _check_patterns(n: int, start: int, stop: int):
    irreducible = members = 0
    mismatches = []
    for pattern in range(start, stop):
        g = graph_from_pattern(n, pattern)
        if not is_irreducible(g):
            continue
        irreducible += 1
        in_family = j_identify(g) is not None
        members += in_family
        if in_family != (small_subgraph_test(g) is None):
            mismatches.append(g.edges())
    return irreducible, members, mismatches


def verify_p3p4(max_order: int = 6, workers: int = 1) -> P3P4Summary:
    """Exhaustive check that an irreducible graph is in J exactly when it
    has at most one irreducible induced subgraph of order 3 and of
    order 4."""
    if max_order < 1:
        raise InputError("max order must be positive", token=str(max_order))
    jobs = []
    for n in range(1, max_order + 1):
        total = 1 << (n * (n - 1) // 2)
        jobs.extend(
            (n, start, min(start + CHUNK, total))
            for start in range(0, total, CHUNK)
        )

    if workers > 1:
        results = Parallel(n_jobs=workers)(
            delayed(_check_patterns)(*job) for job in jobs
        )
    else:
        results = [_check_patterns(*job) for job in jobs]

    summary = P3P4Summary(
        max_order=max_order,
        irreducible=sum(r[0] for r in results),
        members=sum(r[1] for r in results),
        mismatches=[edges for r in results for edges in r[2]],
    )
    logger.info(
        "Small subgraph classification checked", max_order=max_order,
        irreducible=summary.irreducible, mismatches=len(summary.mismatches),
    )
    return summary
