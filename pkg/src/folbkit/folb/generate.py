"""Formula text generated from parameters: bounded distances and pattern sentences."""

from __future__ import annotations

import numpy as np

from ..errors import DisconnectedPattern
from ..graph import Graph
from .. import _kernels


def dist_macros(k_max: int) -> list[tuple[str, list[str], str]]:
    """``dist_le_k`` and ``dist_k`` for ``k <= k_max`` as (name, params, body)."""
    out = [("dist_le_0", ["x", "y"], "x = y"), ("dist_0", ["x", "y"], "x = y")]
    for k in range(1, k_max + 1):
        out.append((f"dist_le_{k}", ["x", "y"], f"x = y | exists z (E(x,z) & dist_le_{k - 1}(z,y))"))
        out.append((f"dist_{k}", ["x", "y"], f"dist_le_{k}(x,y) & !dist_le_{k - 1}(x,y)"))
    return out


def slim_macros(k_max: int) -> list[tuple[str, list[str], str]]:
    # intervals are k-slim: every interval vertex is within k of the other two sides
    return [
        (
            f"interval_delta_slim_{k}",
            [],
            f"forall x forall y forall z forall u (B(y,u,z) -> "
            f"exists v ((B(x,v,y) | B(x,v,z)) & dist_le_{k}(u,v)))",
        )
        for k in range(k_max + 1)
    ]


def _nest(p: int, pair_text) -> str:
    # exists v0 exists v1 (c01 & exists v2 (c02 & c12 & ...)); constraints are
    # placed as soon as both endpoints are bound so evaluation prunes early
    def level(i: int) -> str:
        if i == p:
            return ""
        conds = [pair_text(j, i) for j in range(i)]
        rest = level(i + 1)
        parts = conds + ([rest] if rest else [])
        body = " & ".join(parts) if parts else f"v{i} = v{i}"
        return f"exists v{i} ({body})"

    return level(0)


def induced_sentence(h: Graph) -> str:
    """Sentence true iff ``h`` occurs as an induced subgraph."""

    def pair(j, i):
        if h.adj[i, j]:
            return f"E(v{j},v{i})"
        return f"!E(v{j},v{i}) & v{j} != v{i}"

    return _nest(h.n, pair)


def isometric_sentence(h: Graph) -> str:
    """Sentence true iff ``h`` occurs as an isometric subgraph."""
    d = _kernels.apsp(np.ascontiguousarray(h.adj))
    if (d < 0).any():
        raise DisconnectedPattern("isometric pattern must be connected")
    return _nest(h.n, lambda j, i: f"dist_{int(d[j, i])}(v{j},v{i})")


def pattern_diameter(h: Graph) -> int:
    d = _kernels.apsp(np.ascontiguousarray(h.adj))
    return int(d.max()) if h.n else 0
