"""Componentwise polymatroidal ideals: exchange checks, linear-quotients orders and shellings."""

__version__ = "0.1.0"

from .ideal import MonomialIdeal, component, degree_range, minimalize  # noqa: E402
from .linear_quotients import (  # noqa: E402
    search_lq_order,
    split,
    synthesize_lq_order,
    verify_linear_quotients,
)
from .multicomplex import Multicomplex, shelling_order, verify_shelling  # noqa: E402
from .polymatroid import (  # noqa: E402
    is_componentwise_polymatroidal,
    is_polymatroidal,
    verify_dual_exchange_bounded,
    verify_exchange_condition_bounded,
)

__all__ = [
    "MonomialIdeal", "Multicomplex", "component", "degree_range", "minimalize",
    "is_componentwise_polymatroidal", "is_polymatroidal",
    "verify_exchange_condition_bounded", "verify_dual_exchange_bounded",
    "search_lq_order", "split", "synthesize_lq_order", "verify_linear_quotients",
    "shelling_order", "verify_shelling",
]
