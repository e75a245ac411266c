from multiprocessing.pool import ThreadPool
from threading import Thread

from promise import Promise
from .utils import resolve_call

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, List, Optional


class ThreadExecutor(object):
    """Runs measurements of independent instances in threads. Oracles are
    built per call, so no counters are shared between threads."""

    pool = None  # type: Optional[ThreadPool]

    def __init__(self, pool=0):
        # type: (int) -> None
        self.threads = []  # type: List[Thread]
        self.pending = []  # type: List[Any]
        if pool:
            self.execute = self.execute_in_pool
            self.pool = ThreadPool(processes=pool)
        else:
            self.execute = self.execute_in_thread

    def wait_until_finished(self):
        # type: () -> None
        while self.threads:
            threads = self.threads
            self.threads = []
            for thread in threads:
                thread.join()
        while self.pending:
            pending = self.pending
            self.pending = []
            for result in pending:
                result.wait()

    def clean(self):
        # type: () -> None
        self.threads = []
        self.pending = []
        if self.pool is not None:
            self.pool.close()
            self.pool.join()

    def execute_in_thread(self, fn, *args, **kwargs):
        # type: (Callable, *Any, **Any) -> Promise
        promise = Promise()  # type: ignore
        thread = Thread(target=resolve_call, args=(promise, fn, args, kwargs))
        thread.start()
        self.threads.append(thread)
        return promise

    def execute_in_pool(self, fn, *args, **kwargs):
        # type: (Callable, *Any, **Any) -> Promise
        promise = Promise()  # type: ignore
        self.pending.append(
            self.pool.apply_async(resolve_call, (promise, fn, args, kwargs))  # type: ignore
        )
        return promise
