"""Exact multiplicities for the categorical blow-up formula of Hilbert schemes
and higher rank moduli on a blown-up surface."""

from .chern import (
    PRESETS,
    AssumptionError,
    BaseClass,
    BlowupClass,
    SurfaceInvariants,
    SurfaceKind,
    class_vd,
    del_pezzo,
    discriminant,
    moduli_dimension,
    quot_expected_dims,
    twist,
    validate_assumption,
)
from .partitions import (
    ThetaVector,
    YoungDiagram,
    a_count,
    a_infinity,
    a_tilde,
    enumerate_theta,
    pairing,
    partition_count,
    rank1_bijection,
    rank1_inverse,
)
from .series import (
    INFINITY,
    NEG_INFINITY,
    QSeries,
    coefficient,
    euler_product_inv,
    goettsche_series,
    inv_one_minus_qd,
    lattice_theta_sum,
    series_mul,
)
from .sod import run as sod_run
from .sod import terminal_multiplicities

__version__ = "0.1.0"
