"""
Configuration for the choosability verifier
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Coloring bounds (fixed by the theorem being checked, not overridable)
NUM_COLORS = 9
MAX_DEGREE = 8

# Exhaustive tier: larger instances must go through sampling
EXHAUSTIVE_MAX_EDGES = int(os.getenv("CHOOSE_EXHAUSTIVE_MAX_EDGES", "8"))
EXHAUSTIVE_MAX_PALETTE = int(os.getenv("CHOOSE_EXHAUSTIVE_MAX_PALETTE", "20"))

# Uniform sampler: split evaluations allowed while counting, before falling back to sequential draws
SAMPLER_MAX_STEPS = int(os.getenv("CHOOSE_SAMPLER_MAX_STEPS", "2000000"))

# Randomized checks (never time-based)
DEFAULT_SEED = int(os.getenv("CHOOSE_SEED", "42"))
DEFAULT_SAMPLES = int(os.getenv("CHOOSE_SAMPLES", "10000"))
DEFAULT_RECOLOR_SAMPLES = int(os.getenv("CHOOSE_RECOLOR_SAMPLES", "1000"))
DEFAULT_THREADS = int(os.getenv("CHOOSE_THREADS", "1"))

# Discharging locality check
LOCALITY_RADIUS = int(os.getenv("CHOOSE_LOCALITY_RADIUS", "2"))
LOCALITY_FALLBACK_RADIUS = int(os.getenv("CHOOSE_LOCALITY_FALLBACK_RADIUS", "3"))

# Random planar generator
GENERATOR_MAX_RETRIES = int(os.getenv("CHOOSE_GENERATOR_MAX_RETRIES", "20"))
GENERATOR_FLIPS_PER_VERTEX = int(os.getenv("CHOOSE_GENERATOR_FLIPS_PER_VERTEX", "3"))

# Logging
LOG_LEVEL = os.getenv("CHOOSE_LOG_LEVEL", "INFO")

# HTTP API
API_HOST = os.getenv("CHOOSE_API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("CHOOSE_API_PORT", "8000"))
