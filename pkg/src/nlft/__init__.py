"""Discrete AKNS-ZS nonlinear Fourier transforms and layer-peeling inverses."""
from .errors import NLFTError, NotConstMass, NotInImage
from .exppoly import ExpMat, ExpPoly
from .nlft_d import (
    DeltaDistribution,
    forward_d,
    inverse_d,
    inverse_d_weighted,
    membership_d,
    peel_step_d,
    reduce_d,
)
from .nlft_dual import (
    GapVector,
    MassVector,
    complexity_report,
    forward_dual,
    hat_forward_dual,
    inverse_dual_constmass,
)
from .nlft_e import GridMat, forward_e, inverse_e, membership_e, peel_step_e, stratum_count
from .su2core import QMat

__version__ = "0.1.0"
