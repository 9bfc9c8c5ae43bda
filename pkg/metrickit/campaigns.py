"""
Seeded axiom-verification campaigns, run inline or across worker processes
"""

import logging
from dataclasses import dataclass, field
from typing import List

from .config import SETTINGS
from .core import AxiomReport, verify_metric_axioms
from .errors import ParameterError
from .metrics import as_metric
from .processes import WorkerPool
from .sampling import sample_carrier

logger = logging.getLogger(__name__)

@dataclass
class CampaignReport():
    metric: str
    seeds: List[int]
    samples: int
    report: AxiomReport
    failing_seeds: List[int] = field(default_factory=list)

    @property
    def passed(self):
        return self.report.passed

    def to_dict(self):
        return {
            'metric'        : self.metric,
            'seeds'         : list(self.seeds),
            'samples'       : self.samples,
            'failing_seeds' : list(self.failing_seeds),
            **self.report.to_dict()
        }

def _verify_seed(child=None, **kwargs):
    """
    One campaign unit: sample the carrier with a seed and verify the axioms
    """

    metric = kwargs['metric']
    sample = sample_carrier(metric, kwargs['samples'], kwargs['seed'], kwargs.get('dim', 2))
    report = verify_metric_axioms(metric, sample, kwargs['tolerance'])

    return True, report, None

def run_campaign(metric, seeds, samples=None, tolerance=None, workers=None, dim=2):
    """
    Verify the metric axioms on one random sample per seed

    Keywords
    --------
    metric : MetricDescriptor or callable
        The metric under test
    seeds : iterable of int
        One sample is drawn per seed; reports are merged in seed order
    samples : int
        Sample size per seed (defaults to verification.default_samples)
    tolerance : float or None
        Passed through to verify_metric_axioms
    workers : int or None
        Number of worker processes (1 runs inline)
    """

    metric = as_metric(metric)
    seeds = [int(seed) for seed in seeds]
    if not seeds:
        raise ParameterError('A campaign needs at least one seed')
    if samples is None:
        samples = SETTINGS['verification']['default_samples']
    if workers is None:
        workers = SETTINGS['campaigns']['workers']
    if tolerance is None:
        tolerance = metric.default_tolerance

    kwargs_list = [
        {'metric': metric, 'samples': samples, 'seed': seed, 'tolerance': tolerance, 'dim': dim}
            for seed in seeds
    ]

    if workers > 1 and len(seeds) > 1:
        with WorkerPool(min(workers, len(seeds))) as pool:
            reports = pool.map(_verify_seed, kwargs_list)
    else:
        reports = [_verify_seed(**kwargs)[1] for kwargs in kwargs_list]

    merged = reports[0]
    for report in reports[1:]:
        merged = merged.merge(report)
    failing = [seed for seed, report in zip(seeds, reports) if not report.passed]
    logger.debug(f'{metric.name}: campaign over {len(seeds)} seeds, {len(failing)} failing')

    return CampaignReport(metric.name, seeds, samples, merged, failing)
