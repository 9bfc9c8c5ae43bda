import yaml
import pathlib as pl
import unittest as ut

from metrickit import processes, fixtures
from metrickit.campaigns import run_campaign
from metrickit.errors import CampaignError, ParameterError
from metrickit.metrics import MetricDescriptor

settings_filepath = str(pl.Path(__file__).parent.joinpath('fixtures/acceptance-settings.yml'))
with open(settings_filepath, 'r') as stream:
    acceptance_settings = yaml.load(stream, Loader=yaml.FullLoader)['acceptance_settings']

N_SEEDS   = acceptance_settings['campaigns']['seeds']
N_SAMPLES = acceptance_settings['campaigns']['samples']
N_WORKERS = acceptance_settings['campaigns']['workers']

NPROCESSES = 3

def echo(child=None, **kwargs):
    return True, (child.index, kwargs['item']), None

def fail(child=None, **kwargs):
    raise ValueError(f'cannot handle {kwargs["item"]}')

@processes.queued
def echo_through_worker(child=None, **kwargs):
    return True, kwargs['item'], 'ok'

class TestWorkerProcesses(ut.TestCase):
    """
    """

    def test_forking_multiple_processes(self):
        """
        """

        children = [processes.WorkerProcess(index) for index in range(NPROCESSES)]

        # start the child processes
        for child in children:
            child.start()

        # pass an object through the queues
        for child in children:
            child.submit(echo, item='Hello World!')
            result, output, message = child.collect()
            self.assertEqual(output, (child.index, 'Hello World!'))

        # join the child processes
        for child in children:
            child.stop()
            self.assertFalse(child.is_alive())

        return

    def test_queued_calls(self):
        child = processes.WorkerProcess()
        child.start()
        try:
            result, output, message = echo_through_worker(child, item=42)
            self.assertEqual((result, output, message), (True, 42, 'ok'))
        finally:
            child.stop()

    def test_errors_come_back_through_the_queue(self):
        with processes.WorkerPool(2) as pool:
            with self.assertRaises(CampaignError):
                pool.map(fail, [{'item': 1}])

    def test_pool_preserves_submission_order(self):
        with processes.WorkerPool(N_WORKERS) as pool:
            self.assertEqual(pool.size, N_WORKERS)
            outputs = pool.map(echo, [{'item': item} for item in range(7)])
        self.assertEqual([item for index, item in outputs], list(range(7)))
        self.assertEqual([index for index, item in outputs], [item % N_WORKERS for item in range(7)])

    def test_stopping_an_inactive_worker(self):
        with self.assertRaises(CampaignError):
            processes.WorkerProcess().stop()
        with self.assertRaises(CampaignError):
            processes.WorkerPool(0)

class TestCampaigns(ut.TestCase):
    """
    """

    def test_campaign_passes_for_a_metric(self):
        campaign = run_campaign(MetricDescriptor.padic(7), range(N_SEEDS), N_SAMPLES, tolerance=0)
        self.assertTrue(campaign.passed)
        self.assertEqual(campaign.report.samples_tested, N_SEEDS * N_SAMPLES)
        self.assertEqual(campaign.failing_seeds, [])

    def test_campaign_reports_every_failing_seed(self):
        campaign = run_campaign(fixtures.squared_difference, range(N_SEEDS), N_SAMPLES)
        self.assertFalse(campaign.passed)
        self.assertEqual(campaign.failing_seeds, list(range(N_SEEDS)))
        self.assertEqual(campaign.to_dict()['metric'], 'squared_difference')

    def test_worker_count_does_not_change_the_result(self):
        for metric in [fixtures.squared_difference, MetricDescriptor.vector('l2', 3), MetricDescriptor.padic(5)]:
            inline = run_campaign(metric, range(N_SEEDS), N_SAMPLES, workers=1)
            parallel = run_campaign(metric, range(N_SEEDS), N_SAMPLES, workers=N_WORKERS)
            self.assertEqual(inline.to_dict(), parallel.to_dict())

    def test_closures_cross_process_boundaries(self):
        scale = 3.0
        campaign = run_campaign(lambda x, y: scale * abs(x - y), range(N_SEEDS), N_SAMPLES, workers=N_WORKERS)
        self.assertTrue(campaign.passed)

    def test_campaign_needs_seeds(self):
        with self.assertRaises(ParameterError):
            run_campaign(MetricDescriptor.discrete(), [])

if __name__ == '__main__':
    ut.main()
