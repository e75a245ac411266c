"""Seeded sequential builds over all three encodings."""
from hlab.instances import derive_seed
from hlab.pyutils.bits import popcount
from hlab.sequential import make_oracle, sequential_build, theorem2_check

SIZES = {"misp": range(4, 11), "hcp": range(4, 8), "sat": range(3, 7)}


def seeded_builds(count):
    for index in range(count):
        problem = ("misp", "hcp", "sat")[index % 3]
        sizes = SIZES[problem]
        n = sizes[index % len(sizes)]
        seed = derive_seed(0x5EED, 100, index)
        oracle = make_oracle(problem, n, seed)
        yield problem, n, seed, sequential_build(oracle, "random", seed=seed)


def test_hundred_seeded_traces():
    # type: () -> None
    for problem, n, seed, trace in seeded_builds(100):
        checker = make_oracle(problem, n, seed)
        previous = None
        for step in trace.steps:
            assert checker.member(step.snapshot).member
            if previous is not None:
                assert popcount(step.snapshot) == popcount(previous) + 1
                assert step.snapshot & previous == previous
            previous = step.snapshot
        assert theorem2_check(trace)
        assert trace.outcome == "support"

        if problem == "misp":
            partial = 0
            for query in trace.queries[1:]:
                assert query.work <= popcount(partial)
                if query.accepted:
                    partial |= 1 << query.element


def test_first_feasible_misp_probes_stay_quadratic():
    # type: () -> None
    for index in range(20):
        n = 4 + index % 12
        oracle = make_oracle("misp", n, derive_seed(0x5EED, 101, index))
        trace = sequential_build(oracle)
        assert len(trace.queries) == n + 1
        assert sum(q.work for q in trace.queries) <= n * (n + 1) // 2
