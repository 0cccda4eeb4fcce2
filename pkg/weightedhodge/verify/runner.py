from concurrent.futures import ProcessPoolExecutor

from .. import exceptions
from ..config import get_config, set_config
from ..logging import get_logger
from .instances import suite_rng
from .results import Case
from .suites import SUITES

__all__ = ["run_case", "run_suite", "run_all"]


def run_case(name, seed, max_n):
    """Run one suite on one seed."""
    case = Case(name, seed, suite_rng(name, seed), max_n)
    SUITES[name](case)
    return case.results


def _run_case(args):
    return run_case(*args)


def _initialize(config):
    set_config(config)


def run_suite(name, seeds=None, max_n=None, workers=None, first_seed=0):
    """
    Run a verification suite on a range of seeds.

    Args:
        name (str): Suite name, a key of :data:`SUITES`.
        seeds (int, optional): Number of seeds. Defaults to
            ``verify.seeds``.
        max_n (int, optional): Vertex cap for random instances. Defaults to
            ``verify.max_n``.
        workers (int, optional): Worker processes. Defaults to
            ``verify.workers``; 1 runs in this process.
        first_seed (int, optional): First seed of the range.

    Returns:
        list: :class:`CheckResult` instances sorted by id.

    Raises:
        UnknownSuite: If ``name`` is not registered.

    """
    if name not in SUITES:
        raise exceptions.UnknownSuite(name, sorted(SUITES))
    config = get_config()
    seeds = config["verify"]["seeds"] if seeds is None else seeds
    max_n = config["verify"]["max_n"] if max_n is None else max_n
    workers = config["verify"]["workers"] if workers is None else workers
    last = first_seed + seeds
    jobs = [(name, seed, max_n) for seed in range(first_seed, last)]
    get_logger().debug(
        f"verify: suite `{name}`, seeds {first_seed}..{last - 1}, "
        f"max_n={max_n}, workers={workers}"
    )
    if workers > 1:
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_initialize,
            initargs=(config,),
        ) as executor:
            batches = list(executor.map(_run_case, jobs))
    else:
        batches = [_run_case(job) for job in jobs]
    results = [result for batch in batches for result in batch]
    results.sort(key=lambda result: result.id)
    failures = sum(1 for result in results if not result.passed)
    get_logger().debug(
        f"verify: suite `{name}` ran {len(results)} check(s), "
        f"{failures} failure(s)"
    )
    return results


def run_all(**kwargs):
    """Run every registered suite; keyword arguments as for
    :func:`run_suite`."""
    results = []
    for name in SUITES:
        results.extend(run_suite(name, **kwargs))
    return results
