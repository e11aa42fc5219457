# -*- coding: utf-8; -*-

"""Experiment sweeps, exponent fits and predicted exponents.

A sweep runs one solver over a family for every (n, seed) cell of its grid,
checks each output and appends one CSV row per cell.
"""

import csv
import io
import json
import logging
import os
import time
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import glob2
import numpy as np

from lclbench import formulas
from lclbench.algorithms import ALGORITHMS, solve
from lclbench.checkers import make_problem
from lclbench.exc import Abort, ParameterError
from lclbench.families import FAMILIES, make_instance
from lclbench.labels import ACTIVE, VARIANTS

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

COLUMNS = ('n', 'seed', 'family', 'algorithm', 'variant', 'delta', 'd', 'k',
           'avg_rounds', 'worst_rounds', 'total_rounds', 'wall_ms')

MIN_R2 = 0.98

X_TRANSFORMS = ('n', 'logstar')


class ExperimentConfig(object):
    """One sweep: a family and its parameters, a solver, the n grid and seeds.

    Path lengths are rounded up by default, like the gamma schedules, so that
    every size of the grid sees the same length-to-threshold ratio.
    """

    fields = ('family', 'algorithm', 'variant', 'n_grid', 'seeds', 'csv',
              'k', 'delta', 'd', 'regime', 'alphas', 'gammas', 'id_factor',
              'rounding')

    def __init__(self, family, algorithm, n_grid, seeds=1, variant='2.5', csv=None,
                 k=2, delta=5, d=2, regime='poly', alphas=None, gammas=None, id_factor=1,
                 rounding='ceil'):
        self.family = family
        self.algorithm = algorithm
        self.variant = variant
        self.n_grid = [int(n) for n in n_grid]
        self.seeds = int(seeds)
        self.csv = csv
        self.k = int(k)
        self.delta = int(delta)
        self.d = int(d)
        self.regime = regime
        self.alphas = alphas
        self.gammas = gammas
        self.id_factor = int(id_factor)
        self.rounding = rounding
        self.validate()

    def __repr__(self):
        return '<ExperimentConfig %s/%s n=%r seeds=%d>' % (
            self.family, self.algorithm, self.n_grid, self.seeds)

    def validate(self):
        if self.family not in dict(FAMILIES):
            raise ParameterError('unknown family %r' % (self.family,))
        if self.algorithm not in dict(ALGORITHMS):
            raise ParameterError('unknown algorithm %r' % (self.algorithm,))
        if self.variant not in VARIANTS:
            raise ParameterError('unknown variant %r' % (self.variant,))
        if self.regime not in formulas.REGIMES:
            raise ParameterError('unknown regime %r' % (self.regime,))
        if self.rounding not in formulas.ROUNDINGS:
            raise ParameterError('unknown rounding %r' % (self.rounding,))
        if not self.n_grid:
            raise ParameterError('n_grid is empty')
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise ParameterError('n_grid must be strictly increasing: %r' % (self.n_grid,))
        if self.seeds < 1:
            raise ParameterError('need at least one seed per grid point, got %d' % self.seeds)

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self.fields)

    @classmethod
    def from_dict(cls, doc, **overrides):
        doc = dict(doc)
        doc.update((key, value) for key, value in overrides.items() if value is not None)
        unknown = set(doc) - set(cls.fields)
        if unknown:
            raise ParameterError('unknown experiment field(s): %s' % ', '.join(sorted(unknown)))
        try:
            return cls(**doc)
        except TypeError as exc:
            raise ParameterError('incomplete experiment config: %s' % exc)

    @classmethod
    def from_json(cls, path, **overrides):
        try:
            with open(path) as f:
                doc = json.load(f)
        except (IOError, ValueError) as exc:
            raise ParameterError('cannot read experiment config %s: %s' % (path, exc))
        return cls.from_dict(doc, **overrides)

    def cells(self):
        return [(n, seed) for n in self.n_grid for seed in range(self.seeds)]


# avg_active is the mean over Active-input nodes; it stays out of the CSV
Cell = namedtuple('Cell', COLUMNS + ('avg_active', 'failures'))


def run_cell(config, n, seed):
    """Generate, solve and check one instance."""
    instance = make_instance(config.family, n, k=config.k, delta=config.delta, d=config.d,
                             alphas=config.alphas, regime=config.regime, seed=seed,
                             id_factor=config.id_factor, rounding=config.rounding)
    tree = instance.tree
    delta = instance.meta.get('delta') or config.delta
    started = time.perf_counter()
    solution = solve(config.algorithm, tree, instance.inputs, k=config.k,
                     variant=config.variant, delta=delta, d=config.d, gammas=config.gammas)
    wall_ms = (time.perf_counter() - started) * 1000.0
    trace = solution.trace

    problem = make_problem(solution.problem, tree, instance.inputs, **solution.params)
    verdict = problem.check(trace.outputs)
    failures = ['%s at node %d: %s' % (v.rule, v.node, v.message) for v in verdict.violations]
    failures.extend('%s: observed %s above bound %s' % (e.name, e.observed, e.bound)
                    for e in trace.violations)

    summary = trace.summary()
    active = [r for r, given in zip(trace.termination_round, instance.inputs) if given == ACTIVE]
    avg_active = sum(active) / float(len(active)) if active else None
    log.info('cell n=%d seed=%d: avg %.3f worst %d, %d failure(s)',
             tree.n, seed, summary['avg'], summary['worst'], len(failures))
    return Cell(tree.n, seed, config.family, config.algorithm, config.variant,
                delta, config.d, config.k, summary['avg'], summary['worst'],
                summary['total'], wall_ms, avg_active, failures)


def _run_cell(job):
    return run_cell(*job)


def worker_cap(requested=None):
    """``requested`` (default: CPU count) capped by ``LCL_WORKERS``."""
    workers = requested or os.cpu_count() or 1
    env = os.environ.get('LCL_WORKERS')
    if env:
        try:
            workers = min(workers, int(env))
        except ValueError:
            raise ParameterError('LCL_WORKERS must be an integer, got %r' % (env,))
    return max(1, int(workers))


def _format(value):
    if isinstance(value, float):
        return '%.12g' % value
    if value is None:
        return ''
    return value


def format_rows(cells, header=True):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    if header:
        writer.writerow(COLUMNS)
    for cell in cells:
        writer.writerow([_format(getattr(cell, name)) for name in COLUMNS])
    return buf.getvalue()


def append_rows(path, cells):
    """Append ``cells`` to the CSV at ``path`` with one write."""
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    text = format_rows(cells, header=fresh)
    with open(path, 'a') as f:
        f.write(text)


def run_experiment(config, workers=None):
    """Run every cell of ``config``; rows come back sorted by (n, seed).

    Cells run in a process pool of :func:`worker_cap` workers. A failing
    cell aborts the sweep naming its (n, seed); with ``config.csv`` set the
    rows are appended there once all cells finished.
    """
    jobs = [(config, n, seed) for n, seed in config.cells()]
    workers = min(worker_cap(workers), len(jobs))
    log.info('%r: %d cell(s) on %d worker(s)', config, len(jobs), workers)

    cells = []
    if workers == 1:
        for job in jobs:
            try:
                cells.append(_run_cell(job))
            except Exception as exc:
                raise Abort('cell n=%d seed=%d failed: %s' % (job[1], job[2], exc)) from exc
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [(job, pool.submit(_run_cell, job)) for job in jobs]
            for job, future in futures:
                try:
                    cells.append(future.result())
                except Exception as exc:
                    raise Abort('cell n=%d seed=%d failed: %s' % (job[1], job[2], exc)) from exc

    cells.sort(key=lambda c: (c.n, c.seed))
    if config.csv:
        append_rows(config.csv, cells)
    return cells


FitResult = namedtuple('FitResult', 'slope intercept r2 points dropped')


def _least_squares(xs, ys):
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    if np.ptp(lx) == 0:
        raise ParameterError('need at least two distinct x values to fit')
    slope, intercept = np.polyfit(lx, ly, 1)
    residual = ly - (slope * lx + intercept)
    spread = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if spread == 0 else max(0.0, 1.0 - float(np.sum(residual ** 2)) / spread)
    return float(slope), float(intercept), r2


def fit_exponent(points, x_transform='n'):
    """Least squares slope of log y against log x.

    ``x_transform='logstar'`` replaces x by log* x first. When the fit has
    r2 below 0.98 and more than three points, the point with the smallest x
    is dropped and the fit redone; ``FitResult.dropped`` names it.
    """
    points = sorted((float(x), float(y)) for x, y in points)
    if len(points) < 3:
        raise ParameterError('need at least 3 points to fit, got %d' % len(points))
    if any(x <= 0 or y <= 0 for x, y in points):
        raise ParameterError('fit points must be positive')
    if x_transform == 'logstar':
        points = [(float(formulas.iterated_log(x)), y) for x, y in points]
    elif x_transform != 'n':
        raise ParameterError('unknown x transform %r' % (x_transform,))

    slope, intercept, r2 = _least_squares(*zip(*points))
    dropped = None
    if r2 < MIN_R2 and len(points) > 3:
        dropped = points[0]
        log.info('fit r2=%.4f below %.2f, dropping x=%s', r2, MIN_R2, dropped[0])
        points = points[1:]
        slope, intercept, r2 = _least_squares(*zip(*points))
    return FitResult(slope, intercept, r2, points, dropped)


def read_rows(patterns):
    """Rows of every CSV matched by ``patterns`` (paths or ``**`` globs)."""
    paths = []
    for pattern in patterns:
        matched = sorted(glob2.glob(pattern)) or [pattern]
        paths.extend(p for p in matched if p not in paths)
    if not paths:
        raise ParameterError('no CSV file matches %s' % ', '.join(patterns))
    rows = []
    for path in paths:
        try:
            with open(path) as f:
                rows.extend(csv.DictReader(f))
        except IOError as exc:
            raise ParameterError('cannot read %s: %s' % (path, exc))
    return rows


def mean_by_n(rows, y='avg_rounds'):
    """``[(n, mean y)]`` over the seeds of each n, sorted by n.

    Blank or missing values (``avg_active`` without Active nodes) are skipped.
    """
    groups = {}
    for row in rows:
        try:
            value = row[y]
            n = int(row['n'])
        except KeyError as exc:
            raise ParameterError('CSV row has no column %s' % exc)
        if value not in (None, ''):
            groups.setdefault(n, []).append(float(value))
    return [(n, sum(ys) / len(ys)) for n, ys in sorted(groups.items())]


Monotonicity = namedtuple('Monotonicity', 'ok points')


def check_monotone(points):
    """Whether mean y is non-decreasing in log* n; points are ``(n, y)``."""
    groups = {}
    for n, y in points:
        groups.setdefault(formulas.iterated_log(n), []).append(y)
    means = [(t, sum(ys) / len(ys)) for t, ys in sorted(groups.items())]
    ok = all(b[1] >= a[1] for a, b in zip(means, means[1:]))
    return Monotonicity(ok, means)


Prediction = namedtuple('Prediction', 'delta d k regime x x_prime alpha')


def predict(delta, d, k, regime='poly'):
    """Expected exponent of the node-averaged complexity for (delta, d, k)."""
    if k < 1:
        raise ParameterError('k must be >= 1')
    if regime not in formulas.REGIMES:
        raise ParameterError('unknown regime %r' % (regime,))
    x = formulas.x_factor(delta, d)
    alpha = formulas.alpha_poly(x, k) if regime == 'poly' else formulas.alpha_logstar(x, k)
    return Prediction(delta, d, k, regime, x, formulas.x_prime(delta, d), alpha)


def expected_exponent(config):
    """alpha_1 the sweep of ``config`` should approach, None if not polynomial."""
    if config.regime != 'poly':
        return None
    if config.algorithm == 'apoly':
        return formulas.alpha_poly(formulas.x_factor(config.delta, config.d), config.k)
    if config.algorithm == 'generic' and config.variant == '2.5':
        return formulas.alpha_poly(0, config.k)
    if config.algorithm == 'waug':
        return formulas.alpha_poly(1, config.k)
    return None


Summary = namedtuple('Summary', 'config cells failures points fit expected monotone active_fit')

# families with weight nodes around the Active core
WEIGHTED_FAMILIES = ('weighted', 'augmented')


def summarize(config, cells):
    """Fit (poly regime, three or more sizes) or monotonicity check of a sweep.

    Weighted sweeps also fit the Active-only average: the weight nodes add
    O(log n) rounds to the node average, which pulls its slope below the
    prediction at desk-scale n.
    """
    failures = [(c.n, c.seed, f) for c in cells for f in c.failures]
    rows = [c._asdict() for c in cells]
    points = mean_by_n(rows)
    fit = monotone = active_fit = None
    if config.regime == 'logstar':
        monotone = check_monotone(points)
    elif len(points) >= 3:
        fit = fit_exponent(points)
        if config.family in WEIGHTED_FAMILIES:
            active_fit = fit_exponent(mean_by_n(rows, 'avg_active'))
    return Summary(config, cells, failures, points, fit, expected_exponent(config), monotone,
                   active_fit)
