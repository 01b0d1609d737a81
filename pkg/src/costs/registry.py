"""
Name-to-function registry for cost functions.

The built-in catalogue is registered at import. User cost functions are
added through register_cost(), typically from a file loaded with
load_user_costs(); they may not reuse a name that is already taken.
"""

import importlib.util
import os
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from epsi import epsi_gradient_drift
from utils.errors import CostRegistrationError, UnknownCostError
from utils.logging_setup import get_logger

from . import builtin
from .context import CostContext

logger = get_logger(__name__)

CostCallable = Callable[[CostContext], float]


@dataclass(frozen=True)
class CostFunction:
    """A registered cost and the context inputs it needs."""

    name: str
    func: CostCallable
    requires: Tuple[str, ...] = ()

    def __call__(self, ctx: CostContext) -> float:
        return self.func(ctx)


BUILTIN_COSTS = (
    CostFunction("minabsint", builtin.minabsint),
    CostFunction("maxrealint", builtin.maxrealint),
    CostFunction("zerorealint", builtin.zerorealint),
    CostFunction("zerorealint_squared", builtin.zerorealint_squared),
    CostFunction("noe_1d", builtin.noe_1d, ("excitation_offset_hz",)),
    CostFunction("specdiff", builtin.specdiff, ("target",)),
    CostFunction("asaphsqc", builtin.asaphsqc_cost),
    CostFunction("epsi_gradient_drift", epsi_gradient_drift, ("fid",)),
    CostFunction("dosy_aux", builtin.dosy_aux, ("reference",)),
    CostFunction("dosy", builtin.dosy_cost, ("reference",)),
    CostFunction("dosy_2p", builtin.dosy_2p, ("reference", "delta_s")),
)


class CostRegistry:
    """Built-in costs plus user additions, looked up by name."""

    def __init__(self):
        self._builtin: Dict[str, CostFunction] = {c.name: c for c in BUILTIN_COSTS}
        self._user: Dict[str, CostFunction] = {}

    def register(self, name: str, func: CostCallable,
                 requires: Tuple[str, ...] = ()) -> CostFunction:
        """
        Register a user cost function.

        Raises:
            CostRegistrationError: if the name is empty, built in, or taken
        """
        if not name:
            raise CostRegistrationError("cost function name must be nonempty")
        if name in self._builtin:
            raise CostRegistrationError(f"'{name}' is a built-in cost function")
        if name in self._user:
            raise CostRegistrationError(f"'{name}' is already registered")
        if not callable(func):
            raise CostRegistrationError(f"cost function '{name}' is not callable")

        cost = CostFunction(name, func, tuple(requires))
        self._user[name] = cost
        logger.debug("registered user cost function %s", name)
        return cost

    def unregister(self, name: str) -> None:
        """Remove a user cost function; built-ins cannot be removed."""
        if name in self._builtin:
            raise CostRegistrationError(f"'{name}' is a built-in cost function")
        if self._user.pop(name, None) is None:
            raise UnknownCostError(name, self.names())

    def lookup(self, name: str) -> CostFunction:
        if name in self._builtin:
            return self._builtin[name]
        if name in self._user:
            return self._user[name]
        raise UnknownCostError(name, self.names())

    def names(self) -> List[str]:
        return sorted(list(self._builtin) + list(self._user))

    def is_builtin(self, name: str) -> bool:
        return name in self._builtin


DEFAULT_REGISTRY = CostRegistry()


def register_cost(name: str, func: CostCallable,
                  requires: Tuple[str, ...] = ()) -> CostFunction:
    return DEFAULT_REGISTRY.register(name, func, requires)


def unregister_cost(name: str) -> None:
    DEFAULT_REGISTRY.unregister(name)


def registry_lookup(name: str) -> CostFunction:
    """Resolve a routine's cf name; UnknownCostError lists the alternatives."""
    return DEFAULT_REGISTRY.lookup(name)


def cost_names() -> List[str]:
    return DEFAULT_REGISTRY.names()


def load_user_costs(path: str) -> List[str]:
    """
    Execute a user cost file whose module-level code calls register_cost().

    Returns:
        Names registered by the file
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"User cost file not found: {path}")

    before = set(DEFAULT_REGISTRY.names())
    module_name = "poise_user_costs_" + os.path.splitext(os.path.basename(path))[0]
    spec = importlib.util.spec_from_file_location(module_name, path)
    if spec is None or spec.loader is None:
        raise ImportError(f"cannot load user costs from {path}")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)

    added = sorted(set(DEFAULT_REGISTRY.names()) - before)
    logger.info("loaded %d user cost function(s) from %s", len(added), path)
    return added
