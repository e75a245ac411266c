from .sync import SyncExecutor
from .thread import ThreadExecutor
from .utils import gather

__all__ = ["SyncExecutor", "ThreadExecutor", "gather"]
