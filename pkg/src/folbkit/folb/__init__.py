"""The FOLB formula language: parsing, macros, analysis and evaluation."""

from .analyze import Analysis, analyze, cost_estimate, quantifier_rank, quantifier_rank_b, width
from .ast import to_text
from .evaluator import EvalResult, evaluate, holds
from .parser import Formula, Macro, Prelude, macro_formula, parse, sentence, split_definitions, tokenize
from .prelude import DEFAULT_K, base_prelude, default_prelude, env_prelude, load_prelude

__all__ = [
    "Analysis", "DEFAULT_K", "EvalResult", "Formula", "Macro", "Prelude", "analyze", "base_prelude",
    "cost_estimate", "default_prelude", "env_prelude", "evaluate", "holds", "load_prelude",
    "macro_formula", "parse", "quantifier_rank", "quantifier_rank_b", "sentence", "split_definitions",
    "to_text", "tokenize", "width",
]
