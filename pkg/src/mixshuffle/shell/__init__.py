from .cli import main
from .expr import Evaluator, evaluate, format_value, parse_expression
from .verify import RunConfig, run_verification_suite

__all__ = ["main", "Evaluator", "evaluate", "format_value", "parse_expression", "RunConfig",
           "run_verification_suite"]
