"""Entanglement-assisted classical capacity of qubit channels in Kraus form."""

from .capacity import (
    CapacityRecord,
    MutualInfoBreakdown,
    OptimizerConfig,
    capacity_grid_oracle,
    capacity_record,
    grad_w3,
    i_center_closed,
    mutual_information,
    mutual_information_ad_closed,
    optimize_w3,
)
from .channel import (
    KrausChannel,
    apply_channel,
    completeness_residual,
    exchange_matrix,
    make_amplitude_damping,
    make_depolarizing,
)
from .qmat import (
    BlochVector,
    ConvergenceError,
    binary_entropy,
    bloch_to_density,
    density_to_bloch,
    eig2,
    eig_jacobi,
    von_neumann_entropy,
)

__all__ = [
    "BlochVector",
    "CapacityRecord",
    "ConvergenceError",
    "KrausChannel",
    "MutualInfoBreakdown",
    "OptimizerConfig",
    "apply_channel",
    "binary_entropy",
    "bloch_to_density",
    "capacity_grid_oracle",
    "capacity_record",
    "completeness_residual",
    "density_to_bloch",
    "eig2",
    "eig_jacobi",
    "exchange_matrix",
    "grad_w3",
    "i_center_closed",
    "make_amplitude_damping",
    "make_depolarizing",
    "mutual_information",
    "mutual_information_ad_closed",
    "optimize_w3",
    "von_neumann_entropy",
]
