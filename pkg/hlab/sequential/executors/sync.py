import logging

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable

logger = logging.getLogger(__name__)


class SyncExecutor(object):
    """Runs every measurement inline, in submission order; results come back
    as plain values and failures raise at the call site."""

    def __init__(self):
        # type: () -> None
        self.calls = 0

    def wait_until_finished(self):
        # type: () -> None
        pass

    def clean(self):
        # type: () -> None
        logger.debug("Sync executor ran %d measurements", self.calls)

    def execute(self, fn, *args, **kwargs):
        # type: (Callable, *Any, **Any) -> Any
        self.calls += 1
        return fn(*args, **kwargs)
