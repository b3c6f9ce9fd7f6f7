"""Bound states of the uniaxial anisotropic exciton in the hyperspherical basis."""

from hypexc._core import (  # noqa: F401
    AnalyticLevel,
    ContinuityDefect,
    ContinuityReport,
    ConvergeOptions,
    EffectiveUnits,
    ElongatedReduction,
    HamiltonianMatrix,
    LevelTrajectory,
    Parity,
    PerturbationAxis,
    QuantumNumbers,
    Sector,
    SectorBasis,
    SpectrumResult,
    SweepResult,
    VerifyReport,
    angular_integral_J,
    anisotropy_measure,
    assemble,
    assoc_legendre,
    gamma_from_materials,
    gegenbauer,
    ground_state_pade,
    hyper_integral_I,
    is_valid,
    normalization_S,
    oscillator_strength,
    q_angular,
    reduce_elongated,
    second_order_energy,
    sector_states,
    solve_converged,
    solve_sector,
    spectroscopic_label,
    spherical_energy,
    spherical_oscillator,
    state_index,
    t_hyper,
    track_levels,
    v_element,
    v_element_oracle,
    v_lower_l,
    v_same_l,
    verify_closed_forms,
    wavefunction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
