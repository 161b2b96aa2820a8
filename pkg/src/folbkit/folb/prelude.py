"""Assembling the bundled prelude: generated macros, pattern sentences, classes.folb."""

from __future__ import annotations

import functools
import os
from importlib import resources
from pathlib import Path
from typing import Optional

from .. import families
from ..errors import MissingData
from .generate import dist_macros, induced_sentence, isometric_sentence, pattern_diameter, slim_macros
from .parser import Prelude

DEFAULT_K = 6

# small named patterns used by the class sentences
PATTERNS = {
    "k4m": families.k4_minus,
    "k23": lambda: families.complete_bipartite(2, 3),
    "k33m": families.k33_minus,
    "c4": lambda: families.cycle(4),
    "c5": lambda: families.cycle(5),
    "w4": lambda: families.wheel(4),
    "w4m": lambda: families.almost_wheel(4),
    "fan3": families.fan3,
    "house": families.house,
    "domino": families.domino,
}

# (macro prefix, forbidden list, "induced" or "isometric")
LIST_PATTERNS = (
    ("pmh", "pseudo_median_H", "induced"),
    ("fprime", "beineke_F_primed", "induced"),
    ("hh", "half_hyperbolic_H", "isometric"),
)


def bundled_prelude_path() -> Path:
    return Path(str(resources.files("folbkit.data").joinpath("classes.folb")))


def _add_pattern(p: Prelude, name: str, g, kind: str) -> None:
    text = induced_sentence(g) if kind == "induced" else isometric_sentence(g)
    p.define(f"{kind}_{name}", [], text)


def base_prelude(k: int = DEFAULT_K) -> Prelude:
    """Generated macros only: distances, slimness and pattern sentences."""
    p = Prelude()
    need = k
    for _, lname, kind in LIST_PATTERNS:
        if kind == "isometric" and families.has_list(lname):
            need = max([need] + [pattern_diameter(g) for g in families.forbidden_list(lname)])
    for name, params, body in dist_macros(need):
        p.define(name, params, body)
    for name, params, body in slim_macros(k):
        p.define(name, params, body)
    for name, make in PATTERNS.items():
        g = make()
        _add_pattern(p, name, g, "induced")
        _add_pattern(p, name, g, "isometric")
    for prefix, lname, kind in LIST_PATTERNS:
        try:
            graphs = families.forbidden_list(lname)
        except MissingData as exc:
            p.unavailable[f"{kind}_{prefix}"] = str(exc)
            continue
        names = []
        for i, g in enumerate(graphs):
            _add_pattern(p, f"{prefix}_{i}", g, kind)
            names.append(f"{kind}_{prefix}_{i}")
        p.define(f"{kind}_{prefix}", [], " | ".join(names))
    try:
        hc = families.alpha_one_pattern()
    except MissingData as exc:
        p.unavailable["isometric_hc"] = str(exc)
    else:
        _add_pattern(p, "hc", hc, "isometric")
    return p


def load_prelude(path=None, k: int = DEFAULT_K) -> Prelude:
    """Generated macros followed by the definitions in ``path`` (default: bundled)."""
    p = base_prelude(k)
    text = Path(path).read_text() if path else bundled_prelude_path().read_text()
    return p.extend(text)


@functools.lru_cache(maxsize=None)
def _cached(path: Optional[str], k: int) -> Prelude:
    return load_prelude(path, k)


def default_prelude(k: int = DEFAULT_K) -> Prelude:
    """The bundled prelude (cached). Callers must not mutate it."""
    return _cached(None, k)


def env_prelude() -> Prelude:
    """The prelude named by ``FOLB_PRELUDE`` if set, else the bundled one."""
    path = os.environ.get("FOLB_PRELUDE")
    return _cached(str(Path(path).resolve()), DEFAULT_K) if path else default_prelude()
