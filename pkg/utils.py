"""
Utility Functions
Shared error type, size caps and small helpers for the jeu de taquin toolkit.
"""

import logging
from typing import Optional


# Largest n for which enumerate_standard runs without force=True
ENUMERATION_CAP = 20

# Largest n for exhaustive sweeps over all n! tabloids
EXHAUSTIVE_CAP = 9

# A digit rendering has one symbol per distinct value: '1'..'9'
MAX_DIGIT_VALUES = 9


class JdtError(ValueError):
    """
    Error raised by every module of the toolkit.

    The ``code`` attribute names the failure (REJECT_NOT_PARTITION,
    ERR_CELL_OUTSIDE, ERR_TOO_LARGE, ...); the CLI maps any JdtError to exit 2.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


def check_cap(n: int, cap: int, what: str, force: bool = False) -> None:
    """
    Refuse work on n cells above the cap unless forced.

    Args:
        n: Number of cells of the shape
        cap: Largest n allowed without override
        what: Name of the operation, used in the message
        force: Override flag (CLI --force-large)

    Raises:
        JdtError: ERR_TOO_LARGE
    """
    if n > cap and not force:
        raise JdtError(
            "ERR_TOO_LARGE",
            f"{what} on n={n} exceeds the cap n <= {cap}; pass force/--force-large to override"
        )


def safe_divide(numerator: int, denominator: int, default: Optional[int] = None) -> Optional[int]:
    """Exact integer division, returning default unless denominator divides numerator."""
    if denominator == 0 or numerator % denominator:
        return default
    return numerator // denominator


def configure_logging(verbose: bool = False) -> None:
    """Install a root handler for the CLI; library code only creates loggers."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
