"""Calculator registry for manifest-driven checks."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from ..log_config.logger import log_function_call


@dataclass(frozen=True)
class Evaluation:
    """Computed value of a check and the derivation that produced it."""

    value: Any
    trace: List[str] = field(default_factory=list)


Calculator = Callable[..., Evaluation]


class CalculatorRegistry:
    """Registry mapping manifest calculator names to functions."""

    _calculators: Dict[str, Calculator] = {}

    @classmethod
    def register_calculator(cls, func: Calculator, name: Optional[str] = None) -> None:
        """Register a calculator.

        Args:
            func: Function returning an Evaluation
            name: Optional calculator name (defaults to the function name)
        """
        calculator_name = name or func.__name__
        cls._calculators[calculator_name] = func

    @classmethod
    def get_calculator(cls, name: str) -> Optional[Calculator]:
        return cls._calculators.get(name)

    @classmethod
    def list_calculators(cls) -> List[str]:
        return sorted(cls._calculators)

    @classmethod
    def clear_registry(cls) -> None:
        cls._calculators.clear()


def register_calculator(name: Optional[str] = None):
    """Decorator to register a calculator function.

    Args:
        name: Optional calculator name

    Returns:
        Decorator function
    """

    def decorator(func: Calculator) -> Calculator:
        CalculatorRegistry.register_calculator(log_function_call(func), name)
        return func

    return decorator
