from pathlib import Path

import networkx as nx
import pytest

from scripts.satisfaction import Budget, FiniteStructure
from scripts.syntax import Signature

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

EDGES = Signature(relations=(("E", 2),))


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def three_cycle() -> FiniteStructure:
    return FiniteStructure.from_tables(3, EDGES, relations={"E": [(0, 1), (1, 2), (2, 0)]})


@pytest.fixture
def small_budget() -> Budget:
    return Budget(witness_bound=32, depth_bound=8)


def as_digraph(S: FiniteStructure) -> nx.DiGraph:
    """E as the edge set, every unary relation as a node attribute."""
    G = nx.DiGraph()
    for a in range(S.size):
        G.add_node(a, **{name: bool(table[a]) for name, table in S.relations.items() if table.ndim == 1})
    G.add_edges_from(S.relation_tuples("E"))
    return G


def node_match(left, right) -> bool:
    return left == right
