"""Configuration loaded from environment variables."""

import os

from dotenv import load_dotenv

load_dotenv()

# Engine parallelism (worker processes)
THREADS: int = int(os.getenv("BETTILAB_THREADS", "0")) or (os.cpu_count() or 1)

# Engine caps
MAX_VERTICES: int = int(os.getenv("BETTILAB_MAX_VERTICES", "22"))
MAX_EDGES: int = int(os.getenv("BETTILAB_MAX_EDGES", "25"))
MAX_FACES: int = int(os.getenv("BETTILAB_MAX_FACES", str(2**22)))

# Search
SEARCH_BUDGET: int = int(os.getenv("BETTILAB_SEARCH_BUDGET", "5000000"))
PROGRESS_INTERVAL: float = float(os.getenv("BETTILAB_PROGRESS_INTERVAL", "5.0"))

# Coefficient field used when none is given ("q" or "gf:P")
DEFAULT_FIELD: str = os.getenv("BETTILAB_DEFAULT_FIELD", "q")

# Report archive
DATABASE_URL: str = os.getenv(
    "BETTILAB_DATABASE_URL",
    "sqlite+aiosqlite:///./data/bettilab.db",
)


# Schema version embedded in every JSON document
SCHEMA_VERSION = "bettilab/1"
