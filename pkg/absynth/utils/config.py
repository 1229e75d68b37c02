import os

from dotenv import load_dotenv

load_dotenv()


LOG_LEVEL = os.getenv("ABSYNTH_LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("ABSYNTH_LOG_DIR", "logs")
OUTPUT_DIR = os.getenv("ABSYNTH_OUTPUT_DIR", "out")
DEFAULT_SAMPLES = int(os.getenv("ABSYNTH_DEFAULT_SAMPLES", "3200"))
DEFAULT_CONFIDENCE = float(os.getenv("ABSYNTH_DEFAULT_CONFIDENCE", "0.99"))
DEFAULT_RUNS = int(os.getenv("ABSYNTH_DEFAULT_RUNS", "1000"))

BOUNDARY_TOLERANCE = 1e-9
BISECTION_TOLERANCE = 1e-9
RANK_TOLERANCE = 1e-9
DARE_TOLERANCE = 1e-10
DARE_MAX_ITERATIONS = 100_000
MAX_VERTEX_DIMENSION = 12
MONTE_CARLO_BETA_SIDE = 0.005
