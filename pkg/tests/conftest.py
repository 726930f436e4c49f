from __future__ import annotations

import pytest

from sigdim import Graph, generate_exhaustive, parse_graph


def graph(text: str) -> Graph:
    return parse_graph(text)


K2 = "2 1\n0 1\n"
C3 = "3 3\n0 1\n0 2\n1 2\n"
P3 = "3 2\n0 1\n1 2\n"
K13 = "4 3\n0 1\n0 2\n0 3\n"
TWO_K2 = "4 2\n0 1\n2 3\n"
C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"

# Found by search; the pipeline picks a two-leaf triple (class V) here.
CLASS_V = "6 8\n0 1\n0 2\n0 3\n0 4\n1 5\n2 5\n3 5\n4 5\n"
# Found by search; the pipeline picks one-leaf-edge triples (class VI).
CLASS_VI_1 = "9 17\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n1 2\n1 3\n1 5\n1 6\n1 8\n2 3\n2 5\n2 7\n2 8\n"
CLASS_VI_2 = "9 18\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n2 3\n2 5\n2 6\n2 8\n"


@pytest.fixture(scope="session")
def corpus5() -> list[Graph]:
    out: list[Graph] = []
    for n in range(2, 6):
        out.extend(generate_exhaustive(n))
    return out
