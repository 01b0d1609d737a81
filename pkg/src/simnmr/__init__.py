"""Simulated spectrometer backends with analytically known optima."""

from .config import (
    FERULIC_T1_VALUES,
    SimConfig,
    SimConfigValidator,
    parse_sim_config,
    load_sim_config,
    create_default_sim_config,
    create_noise_free_sim_config,
)

from .experiments import (
    SampleLayout,
    FERULIC,
    FERULIC_PEAKS_PPM,
    NOE_SAMPLE,
    WATER_SAMPLE,
    DOSY_SAMPLE,
    ASAP_SAMPLE,
    PSYCHE_SAMPLE,
    PSYCHE_DEFAULTS,
    PSYCHE_PARAMETER_OPTIMA,
    sim_pulse_acquire,
    ernst_angle,
    invrec_null,
    sim_ernst,
    sim_invrec,
    noe_buildup,
    noe_excitation_offset_hz,
    sim_noe1d,
    epsi_echo_centres,
    sim_epsi_fid,
    presat_residual,
    water_ppm,
    sim_presat,
    dosy_attenuation,
    dosy_ratio,
    dosy_target_gradient,
    sim_dosy,
    inept_transfer,
    asap_optimum,
    sim_asap_projection,
    psyche_kappa,
    psyche_distortion_modifier,
    sim_specdiff_pair,
)

from .backend import (
    BACKEND_NAMES,
    REFERENCE_GRADIENT_PERCENT,
    Acquisition,
    Experiment,
    EXPERIMENTS,
    ReferencePolicy,
    SimulatedSpectrometer,
    resolve_experiment,
)

__all__ = [
    "FERULIC_T1_VALUES",
    "SimConfig",
    "SimConfigValidator",
    "parse_sim_config",
    "load_sim_config",
    "create_default_sim_config",
    "create_noise_free_sim_config",
    "SampleLayout",
    "FERULIC",
    "FERULIC_PEAKS_PPM",
    "NOE_SAMPLE",
    "WATER_SAMPLE",
    "DOSY_SAMPLE",
    "ASAP_SAMPLE",
    "PSYCHE_SAMPLE",
    "PSYCHE_DEFAULTS",
    "PSYCHE_PARAMETER_OPTIMA",
    "sim_pulse_acquire",
    "ernst_angle",
    "invrec_null",
    "sim_ernst",
    "sim_invrec",
    "noe_buildup",
    "noe_excitation_offset_hz",
    "sim_noe1d",
    "epsi_echo_centres",
    "sim_epsi_fid",
    "presat_residual",
    "water_ppm",
    "sim_presat",
    "dosy_attenuation",
    "dosy_ratio",
    "dosy_target_gradient",
    "sim_dosy",
    "inept_transfer",
    "asap_optimum",
    "sim_asap_projection",
    "psyche_kappa",
    "psyche_distortion_modifier",
    "sim_specdiff_pair",
    "BACKEND_NAMES",
    "REFERENCE_GRADIENT_PERCENT",
    "Acquisition",
    "Experiment",
    "EXPERIMENTS",
    "ReferencePolicy",
    "SimulatedSpectrometer",
    "resolve_experiment",
]
