from pytest import raises

from hlab.error import ContractError
from hlab.sequential.executors import SyncExecutor, ThreadExecutor, gather


def square(x):
    return x * x


def fail_on_three(x):
    if x == 3:
        raise ContractError("three")
    return x


def test_sync_executor_gathers_in_order():
    # type: () -> None
    assert gather(SyncExecutor(), square, [(i,) for i in range(5)]) == [0, 1, 4, 9, 16]


def test_thread_executor_gathers_in_order():
    # type: () -> None
    for executor in (ThreadExecutor(), ThreadExecutor(pool=3)):
        try:
            assert gather(executor, square, [(i,) for i in range(8)]) == [
                i * i for i in range(8)
            ]
        finally:
            executor.clean()


def test_failures_are_reraised():
    # type: () -> None
    with raises(ContractError):
        gather(SyncExecutor(), fail_on_three, [(i,) for i in range(5)])
    executor = ThreadExecutor(pool=2)
    try:
        with raises(ContractError) as excinfo:
            gather(executor, fail_on_three, [(i,) for i in range(5)])
        assert excinfo.value.message == "three"
    finally:
        executor.clean()


def test_sync_executor_counts_calls():
    # type: () -> None
    executor = SyncExecutor()
    gather(executor, square, [(2,), (3,)])
    assert executor.calls == 2
    executor.clean()
