import dill
import queue
import logging
import multiprocessing as mp

from .config import SETTINGS
from .errors import CampaignError

logger = logging.getLogger(__name__)

def queued(f):
    """
    This decorator sends functions through a worker's input queue and
    retrieves the result of the function call from its output queue
    """

    def wrapped(worker, **kwargs):
        """
        Keywords
        --------
        worker : WorkerProcess
            A started worker process
        """

        worker.submit(f, **kwargs)
        result, output, message = worker.collect()
        if result is False:
            raise CampaignError(message)
        else:
            return result, output, message

    return wrapped

class WorkerProcess(mp.Process):
    """
    Child process that runs dill-serialized functions sent through its input
    queue; each function is called as f(child=self, **kwargs) and must return
    a (result, output, message) triple
    """

    def __init__(self, index=0):
        """
        """

        super().__init__()

        self.index = index

        # IO queues
        self.iq = mp.Queue()
        self.oq = mp.Queue()

        # Shared memory flag
        self.started = mp.Value('i', 0)

        return

    def start(self) -> None:
        """
        Override the start method
        """

        self.started.value = 1

        super().start()

        return

    def run(self) -> None:
        """
        """

        # main loop
        while self.started.value:

            try:
                item = self.iq.get(timeout=0.05)
            except queue.Empty:
                continue

            # both the function and its kwargs go through dill so that
            # closures and lambdas survive the trip
            try:
                f, kwargs = dill.loads(item)
                result, output, message = f(child=self, **kwargs)
                self.oq.put(dill.dumps((result, output, message)))
            except Exception as error:
                self.oq.put(dill.dumps((False, None, f'{type(error).__name__}: {error}')))

        # emit the exit signal
        self.oq.put(dill.dumps(True))

        return

    def submit(self, f, **kwargs):
        self.iq.put(dill.dumps((f, kwargs)))

    def collect(self):
        return dill.loads(self.oq.get())

    def stop(self, timeout=None):
        """
        Break out of the main loop, flush the queues and join
        """

        if timeout is None:
            timeout = SETTINGS['campaigns']['join_timeout']

        if self.started.value != 1:
            raise CampaignError(f'Worker {self.index} is inactive')

        # Break out of the main loop in the child process
        self.started.value = 0
        try:
            self.oq.get(timeout=timeout)
        except queue.Empty:
            pass

        # Flush the IO queues
        for q in [self.iq, self.oq]:
            while True:
                try:
                    q.get(block=False)
                except queue.Empty:
                    break
            q.close()
            q.join_thread()

        # Attempt to join the child process
        self.join(timeout)

        # Raise an error if it hangs
        if self.is_alive():
            self.terminate()
            raise CampaignError(f'Worker {self.index} dead-locked during cleanup')

        return

class WorkerPool():
    """
    A fixed set of worker processes with an order-preserving map
    """

    def __init__(self, count):
        """
        """

        if count < 1:
            raise CampaignError(f'A pool needs at least one worker, got {count}')

        self._workers = [WorkerProcess(index) for index in range(count)]
        for worker in self._workers:
            worker.start()
        logger.debug(f'Started {count} worker processes')

        return

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False

    @property
    def size(self):
        return len(self._workers)

    def map(self, f, kwargs_list):
        """
        Run f once per kwargs mapping, round-robin over the workers, and return
        the outputs in submission order
        """

        assignments = []
        for position, kwargs in enumerate(kwargs_list):
            worker = self._workers[position % len(self._workers)]
            worker.submit(f, **kwargs)
            assignments.append(worker)

        # each worker answers in the order it was fed
        outputs = []
        for worker in assignments:
            result, output, message = worker.collect()
            if result is False:
                raise CampaignError(message)
            outputs.append(output)

        return outputs

    def close(self):
        errors = []
        for worker in self._workers:
            try:
                worker.stop()
            except CampaignError as error:
                errors.append(str(error))
        self._workers = []
        logger.debug('Worker pool closed')
        if errors:
            raise CampaignError('; '.join(errors))

        return
