"""Cost-function catalogue and registry."""

from .context import CostContext
from .builtin import (
    NOE_EXCISION_HZ,
    DOSY_TARGET_RATIO,
    minabsint,
    maxrealint,
    zerorealint,
    zerorealint_squared,
    noe_1d,
    specdiff,
    asaphsqc_cost,
    dosy_f_att,
    dosy_aux,
    dosy_cost,
    dosy_2p,
    restrict_context,
)
from .registry import (
    BUILTIN_COSTS,
    CostFunction,
    CostRegistry,
    DEFAULT_REGISTRY,
    register_cost,
    unregister_cost,
    registry_lookup,
    cost_names,
    load_user_costs,
)

__all__ = [
    "CostContext",
    "NOE_EXCISION_HZ",
    "DOSY_TARGET_RATIO",
    "minabsint",
    "maxrealint",
    "zerorealint",
    "zerorealint_squared",
    "noe_1d",
    "specdiff",
    "asaphsqc_cost",
    "dosy_f_att",
    "dosy_aux",
    "dosy_cost",
    "dosy_2p",
    "restrict_context",
    "BUILTIN_COSTS",
    "CostFunction",
    "CostRegistry",
    "DEFAULT_REGISTRY",
    "register_cost",
    "unregister_cost",
    "registry_lookup",
    "cost_names",
    "load_user_costs",
]
