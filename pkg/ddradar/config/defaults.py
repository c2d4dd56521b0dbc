# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Common default configuration values."""

from .enums import GainLaw, Profile, ReporterType, TableEmitterType, Waveform

SPEED_OF_LIGHT = 299_792_458.0

PROFILE = Profile.ci

# Grid (ci profile: desk scale)
CI_BANDWIDTH_HZ = 1.0e6
CI_DURATION_S = 2.0e-3
CI_DELAY_PERIOD_S = 50.0e-6
CI_TRIALS = 30
CI_RECTANGLE_SCALE = 4.0

# Grid (paper profile: full scale)
PAPER_BANDWIDTH_HZ = 4.0e6
PAPER_DURATION_S = 20.0e-3
PAPER_DELAY_PERIOD_S = 100.0e-6
PAPER_TRIALS = 100
PAPER_RECTANGLE_SCALE = 1.0

DELAY_OVERSAMPLING = 2
DOPPLER_OVERSAMPLING = 2

# Pulse shaping
FILTER_ALPHA = 1.584
FILTER_BETA = 1.584
FILTER_TRUNCATION = 5
SPARSITY_THRESHOLD = 1.0e-4

CARRIER_HZ = 1.0e9

# Scene
GAIN_LAW = GainLaw.inverse_delay
GAIN_SCALE = 1.0e-7
TARGET_COUNT = 4
RECTANGLE_INDEX = 5
SNAP_TO_GRID = True

# Detection
# inverse-delay gains inside a rectangle span well over 2:1
EXPERIMENT_REL_THRESHOLD = 0.01
RIDGE_MIN_POINTS = 3
SEARCH_MARGIN_RESOLUTIONS = 2.0

# Monte Carlo
SEED = 0
SNR_DB: float | None = None
SNR_LIST_DB = [-20.0, -10.0, 0.0, 10.0, 20.0]
SNR_SWEEP_TAU_MAX_S = 3.0e-6
SNR_SWEEP_NU_MAX_HZ = 600.0
WAVEFORMS = [Waveform.zak_otfs, Waveform.chirp_single_pair, Waveform.chirp_two_pairs]
WAVEFORM = Waveform.zak_otfs

# Bench
BENCH_EXPONENTS = [10, 11, 12, 13, 14]
BENCH_REPEATS = 3
BENCH_BANDWIDTH_HZ = 1.0e6
BENCH_REGION_FRACTION = 0.125

# Reporting
REPORTER = ReporterType.rich
EMIT = [TableEmitterType.csv, TableEmitterType.json]
OUTPUT_DIR = "output"
