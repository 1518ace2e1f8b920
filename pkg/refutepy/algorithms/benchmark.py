"""
This module runs (conjecture, algorithm) cells over several seeds and summarizes
the times to refutation in a table: one row per conjecture, one column per algorithm setting

"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from frozendict import frozendict
from tqdm import tqdm

from refutepy import LIB_INSTALLED
from refutepy.conjectures import get_conjecture
from refutepy.algorithms.search_base import SearchParams
from refutepy.algorithms.search import ALGORITHMS, UnknownAlgorithmError, run_search

logger = logging.getLogger(__name__)

NOT_REFUTED_MARK = '−'

# Published times (in seconds) to refute the built-in conjectures
PUBLISHED_TIMES = frozendict({
    ('graffiti-289', 'nmcs'): 600, ('graffiti-289', 'lnmcs'): 600, ('graffiti-289', 'nrpa'): 200,
    ('graffiti-289', 'gbfs'): 6, ('graffiti-289', 'beam'): 102,
    ('graffiti-29', 'nmcs'): 2, ('graffiti-29', 'lnmcs'): 2, ('graffiti-29', 'nrpa'): 10,
    ('graffiti-29', 'uct'): 5, ('graffiti-29', 'gbfs'): 0, ('graffiti-29', 'grave'): 2, ('graffiti-29', 'rave'): 1,
    ('graffiti-30', 'nmcs'): 0, ('graffiti-30', 'lnmcs'): 0, ('graffiti-30', 'nrpa'): 0, ('graffiti-30', 'uct'): 0,
    ('graffiti-30', 'gbfs'): 311, ('graffiti-30', 'grave'): 0, ('graffiti-30', 'rave'): 0,
    ('graffiti-301', 'nmcs'): 2, ('graffiti-301', 'lnmcs'): 2, ('graffiti-301', 'nrpa'): 4,
    ('graffiti-301', 'gbfs'): 0, ('graffiti-301', 'beam'): 0, ('graffiti-301', 'grave'): 7,
    ('graffiti-301', 'rave'): 2,
    ('graffiti-137', 'gbfs'): 513,
    ('graffiti-139', 'gbfs'): 36,
    ('graffiti-197', 'nmcs'): 30, ('graffiti-197', 'lnmcs'): 30, ('graffiti-197', 'nrpa'): 5,
    ('graffiti-197', 'gbfs'): 0, ('graffiti-197', 'beam'): 4,
})

# Pairs marked as never refuted in the published table
PUBLISHED_NOT_REFUTED = (
    ('graffiti-289', 'uct'), ('graffiti-289', 'grave'), ('graffiti-289', 'rave'),
    ('graffiti-29', 'beam'), ('graffiti-30', 'beam'), ('graffiti-301', 'uct'),
    ('graffiti-197', 'uct'), ('graffiti-197', 'grave'), ('graffiti-197', 'rave'),
) + tuple(
    (conj_id, algo) for conj_id in ['graffiti-137', 'graffiti-139']
    for algo in ['nmcs', 'lnmcs', 'nrpa', 'uct', 'beam', 'grave', 'rave']
)


def _parse_value(text: str):
    lowered = text.lower()
    if lowered in {'true', 'false'}:
        return lowered == 'true'
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


@dataclass(frozen=True)
class BenchCell:
    """A (conjecture, algorithm) pair with optional hyperparameter overrides

    Written as "graffiti-30:beam" or "graffiti-30:beam:beam_width=80,restarts=false"
    """
    conjecture: str
    algorithm: str
    overrides: Tuple[Tuple[str, Any], ...] = field(default=())

    @classmethod
    def parse(cls, text: str) -> 'BenchCell':
        parts = text.strip().split(':')
        if len(parts) not in {2, 3} or not all(parts[:2]):
            raise ValueError(f'Cannot parse bench cell "{text}". Expected "conjecture:algorithm[:key=value,...]"')

        conjecture, algorithm = get_conjecture(parts[0]).id, parts[1].lower()
        if algorithm not in ALGORITHMS:
            raise UnknownAlgorithmError(algorithm)

        overrides = []
        if len(parts) == 3 and parts[2]:
            for pair in parts[2].split(','):
                key, sep, value = pair.partition('=')
                if not sep or key.strip() not in SearchParams.__dataclass_fields__:
                    raise ValueError(f'Cannot parse the override "{pair}" of bench cell "{text}"')
                overrides.append((key.strip(), _parse_value(value.strip())))
        return cls(conjecture, algorithm, tuple(overrides))

    @property
    def setting(self) -> str:
        """The algorithm with its overrides, e.g. "beam:beam_width=80" """
        if not self.overrides:
            return self.algorithm
        return self.algorithm + ':' + ','.join(f"{k}={v}" for k, v in self.overrides)

    @property
    def published_time(self) -> Optional[float]:
        return PUBLISHED_TIMES.get((self.conjecture, self.algorithm)) if not self.overrides else None

    @property
    def published(self) -> Optional[str]:
        """The published table entry: a time, the "not refuted" mark, or None for cells out of the table"""
        if self.overrides:
            return None
        if (self.conjecture, self.algorithm) in PUBLISHED_NOT_REFUTED:
            return NOT_REFUTED_MARK
        published_time = self.published_time
        return format_time(published_time) if published_time is not None else None

    def __str__(self):
        return f"{self.conjecture}:{self.setting}"


DEFAULT_BENCH_CELLS = tuple(
    [BenchCell(conj_id, algo) for conj_id, algo in PUBLISHED_TIMES]
    + [BenchCell(conj_id, algo) for conj_id, algo in PUBLISHED_NOT_REFUTED]
    + [BenchCell('graffiti-30', 'beam', (('beam_width', 80),))]
)


def run_bench_job(cell: BenchCell, seed: Optional[int], budget_seconds: float) -> Dict[str, Any]:
    """Run the search of ``cell`` once and return the row of the results table"""
    params = SearchParams(budget_seconds=budget_seconds, seed=seed).with_overrides(**dict(cell.overrides))
    outcome = run_search(cell.algorithm, cell.conjecture, params)
    logger.info('Bench cell %s, seed %s: refuted=%s in %.2f s', cell, seed, outcome.refuted, outcome.elapsed_seconds)
    return {
        'cell': str(cell), 'conjecture': cell.conjecture, 'setting': cell.setting, 'algorithm': cell.algorithm,
        'seed': outcome.seed, 'refuted': outcome.refuted, 'time_to_refutation': outcome.time_to_refutation,
        'elapsed_seconds': outcome.elapsed_seconds, 'evaluations': outcome.evaluations,
        'best_score': outcome.best_score, 'n': outcome.n,
    }


def bench_jobs(cells: Iterable[BenchCell], n_seeds: int, first_seed: int = 0) -> List[Tuple[BenchCell, Optional[int]]]:
    """Return (cell, seed) pairs to run. Deterministic algorithms are run once per cell"""
    jobs = []
    for cell in cells:
        is_stochastic = ALGORITHMS[cell.algorithm].is_stochastic
        seeds = range(first_seed, first_seed + n_seeds) if is_stochastic else [None]
        jobs.extend((cell, seed) for seed in seeds)
    return jobs


def run_bench(
        cells: Optional[Iterable[BenchCell]] = None, n_seeds: int = 1, budget_seconds: float = 900,
        first_seed: int = 0, n_jobs: int = 1, use_tqdm: bool = False,
):
    """Run every cell of ``cells`` over ``n_seeds`` seeds

    Parameters
    ----------
    cells: `list` of `BenchCell`
        Cells to run. ``DEFAULT_BENCH_CELLS`` if not given
    n_seeds: `int`
        Number of seeds per stochastic cell
    budget_seconds: `float`
        Budget of every single run
    first_seed: `int`
        Seeds are ``first_seed``, ``first_seed + 1``, ...
    n_jobs: `int`
        Number of runs executed in parallel (with joblib)
    use_tqdm: `bool`
        Flag whether to show the progress bar

    Returns
    -------
    results: `pandas.DataFrame`
        One row per run

    """
    import pandas as pd

    if n_seeds < 1:
        raise ValueError(f'Number of seeds should be positive, got {n_seeds}')
    cells = list(cells) if cells is not None else list(DEFAULT_BENCH_CELLS)
    jobs = bench_jobs(cells, n_seeds, first_seed)

    if n_jobs != 1 and not LIB_INSTALLED['joblib']:
        logger.warning('joblib package is not installed. Bench cells are run sequentially')
        n_jobs = 1

    if n_jobs == 1:
        rows = [run_bench_job(cell, seed, budget_seconds)
                for cell, seed in tqdm(jobs, disable=not use_tqdm, desc='Run bench cells')]
    else:
        from joblib import Parallel, delayed

        rows = Parallel(n_jobs=n_jobs)(
            delayed(run_bench_job)(cell, seed, budget_seconds)
            for cell, seed in tqdm(jobs, disable=not use_tqdm, desc='Dispatch bench cells')
        )
    return pd.DataFrame(rows, columns=[
        'cell', 'conjecture', 'setting', 'algorithm', 'seed', 'refuted', 'time_to_refutation',
        'elapsed_seconds', 'evaluations', 'best_score', 'n'])


def format_time(t: Optional[float]) -> str:
    """Return the time rounded to seconds or the "not refuted" mark for a missing time"""
    if t is None or t != t:
        return NOT_REFUTED_MARK
    return f"{t:.0f}"


def summarize_bench(results):
    """Aggregate the runs of every cell: number of runs, of refutations and the median time to refutation

    The median is taken over the refuted runs. It is None when no run refuted the conjecture.
    """
    import pandas as pd

    rows = []
    for cell_label, df in results.groupby('cell', sort=False):
        times = df.loc[df['refuted'].astype(bool), 'time_to_refutation'].astype(float)
        cell = BenchCell.parse(cell_label)
        rows.append({
            'cell': cell_label, 'conjecture': df['conjecture'].iloc[0], 'setting': df['setting'].iloc[0],
            'runs': len(df), 'refuted_runs': len(times),
            'median_time': float(times.median()) if len(times) else None,
            'published_time': cell.published_time, 'published': cell.published,
        })
    return pd.DataFrame(rows, columns=[
        'cell', 'conjecture', 'setting', 'runs', 'refuted_runs', 'median_time', 'published_time', 'published'])


def bench_table(summary):
    """Return the summary as a table of median times with conjectures in rows and algorithm settings in columns"""
    display = summary.assign(time=summary['median_time'].map(format_time))
    table = display.pivot(index='conjecture', columns='setting', values='time')
    table = table.reindex(index=list(dict.fromkeys(summary['conjecture'])),
                          columns=list(dict.fromkeys(summary['setting'])))
    return table.fillna('')
