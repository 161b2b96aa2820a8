"""First-order logic with betweenness over finite graphs."""

from .errors import (
    ArityMismatch,
    BadParams,
    DisconnectedGraph,
    DisconnectedPattern,
    FolbkitError,
    FormulaSyntaxError,
    MissingData,
    NotAvailable,
    ResourceBudgetExceeded,
    UnboundVariable,
    UnknownMacro,
)
from .graph import Graph, load_graph
from .metric import (
    MetricOracle,
    TernaryRelation,
    build_metric,
    check_axioms,
    find_induced,
    find_isometric,
    interval,
)

__version__ = "0.1.0"
