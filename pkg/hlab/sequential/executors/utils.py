from sys import exc_info

from promise import Promise

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Callable, Dict, Iterable, List, Tuple


def resolve_call(
    p,  # type: Promise
    f,  # type: Callable
    args,  # type: Tuple[Any, ...]
    kwargs,  # type: Dict[str, Any]
):
    # type: (...) -> None
    try:
        val = f(*args, **kwargs)
        p.do_resolve(val)
    except Exception as e:
        traceback = exc_info()[2]
        e.stack = traceback  # type: ignore
        p.do_reject(e, traceback=traceback)


def gather(executor, fn, items):
    # type: (Any, Callable, Iterable[Tuple[Any, ...]]) -> List[Any]
    """Calls fn(*item) for every item through the executor and returns the
    results in item order, re-raising the first failure."""
    results = [Promise.resolve(executor.execute(fn, *item)) for item in items]
    executor.wait_until_finished()
    return Promise.all(results).get()
