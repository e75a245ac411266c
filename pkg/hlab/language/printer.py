from ..pyutils.bits import iter_bits

# Necessary for static type checking
if False:  # flake8: noqa
    from ..core.family import SetFamily
    from ..instances.cnf import CnfFormula
    from ..instances.graph import Graph

__all__ = ["print_graph", "print_cnf", "print_family"]


def print_graph(graph):
    # type: (Graph) -> str
    lines = ["p edge {} {}".format(graph.n, graph.m)]
    lines.extend("e {} {}".format(u + 1, v + 1) for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def print_cnf(formula):
    # type: (CnfFormula) -> str
    lines = ["p cnf {} {}".format(formula.num_vars, len(formula.clauses))]
    lines.extend(
        " ".join(str(lit) for lit in clause) + " 0" for clause in formula.clauses
    )
    return "\n".join(lines) + "\n"


def print_family(family):
    # type: (SetFamily) -> str
    """Writes the maximal sets; parsing the result restores the family."""
    lines = ["ground {}".format(family.ground.size)]
    for mask in family.maximal_sets():
        lines.append(" ".join(["set"] + [str(i) for i in iter_bits(mask)]))
    return "\n".join(lines) + "\n"
