"""Inputs handed to a cost function for one evaluation."""

from dataclasses import dataclass, field
from typing import Dict, Optional, Union

import numpy as np

from epsi import EpsiFid
from spectra import Region, Spectrum1D
from utils.errors import MissingContextError


@dataclass
class CostContext:
    """
    Everything a cost function may look at.

    The spectrum is either a Spectrum1D or, for 2D surrogates, a plain
    projection vector. Costs that need a target, a reference, an EPSI FID
    or an aux value fetch it through the require_* helpers.
    """

    spectrum: Optional[Union[Spectrum1D, np.ndarray]] = None
    region: Region = field(default_factory=Region.whole)
    target: Optional[Spectrum1D] = None
    reference: Optional[Spectrum1D] = None
    aux: Dict[str, float] = field(default_factory=dict)
    fid: Optional[EpsiFid] = None

    def require_spectrum(self) -> Spectrum1D:
        if not isinstance(self.spectrum, Spectrum1D):
            raise MissingContextError("this cost needs a spectrum")
        return self.spectrum

    def require_target(self) -> Spectrum1D:
        if self.target is None:
            raise MissingContextError("this cost needs a target spectrum")
        return self.target

    def require_reference(self) -> Spectrum1D:
        if self.reference is None:
            raise MissingContextError("this cost needs a reference spectrum")
        return self.reference

    def require_aux(self, key: str) -> float:
        if key not in self.aux:
            raise MissingContextError(f"this cost needs aux['{key}']")
        return float(self.aux[key])
