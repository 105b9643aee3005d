"""Entry sums of inverse Aztec-diamond Kasteleyn matrices."""

from __future__ import annotations

from fractions import Fraction

from config.constants import MSG_SIZE_LIMIT
from config.settings import settings
from src.contracts.errors import SizeLimitError
from src.contracts.models import AztecSpec
from src.families.aztec import aztec
from src.grid.dual import dual_graph
from src.kasteleyn.orientation import KasteleynMatrix, vertical_domino_matrix
from src.linalg.matrices import entry_sum, inverse_rational
from src.utils.logging import log_event


def aztec_kasteleyn(n: int) -> KasteleynMatrix:
    """K_n: the order-n diamond with every other vertical domino negated."""
    return vertical_domino_matrix(dual_graph(aztec(AztecSpec(kind="DIAMOND", n=n))))


def inverse_entry_sum(n: int) -> Fraction:
    """Sum of all entries of K_n^-1."""
    if n > settings.INVSUM_MAX_ORDER:
        raise SizeLimitError(
            MSG_SIZE_LIMIT.format(what="inverse-sum order", value=n, limit=settings.INVSUM_MAX_ORDER)
        )
    total = entry_sum(inverse_rational(aztec_kasteleyn(n).to_domain()))
    log_event("inverse_sum_computed", n=n, total=total)
    return total
