# config.py
import os
from dotenv import load_dotenv


# Load environment variables from .env file
load_dotenv(override=True)

# --- Service ---
# Optional; when unset the HTTP API is open.
AUTH_TOKEN = os.getenv("AUTH_TOKEN")
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))

# --- Logging ---
LOG_FILE = os.getenv("LOG_FILE", "gorbit.log")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# --- Enumeration Bounds ---
MIN_N = int(os.getenv("MIN_N", "3"))
MAX_N = int(os.getenv("MAX_N", "7"))

# --- Sampling ---
# Every randomized check takes an explicit seed; these are only the defaults.
SEED = int(os.getenv("SEED", "7"))
SAMPLES = int(os.getenv("SAMPLES", "100"))
ORACLE_PLANES = int(os.getenv("ORACLE_PLANES", "500"))
REGULAR_VALUE_SAMPLES = int(os.getenv("REGULAR_VALUE_SAMPLES", "200"))
COCYCLE_TRIPLES = int(os.getenv("COCYCLE_TRIPLES", "20"))
VIRTUAL_SAMPLES = int(os.getenv("VIRTUAL_SAMPLES", "25"))

# Random Gaussian-rational entries are a + b*i with |a|, |b| <= ENTRY_RANGE
ENTRY_RANGE = int(os.getenv("ENTRY_RANGE", "3"))
# Probability that a random plane is pushed into a lower stratum
DEGENERATE_RATE = float(os.getenv("DEGENERATE_RATE", "0.4"))
