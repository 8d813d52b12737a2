import os
import logging
from pathlib import Path

# Configure logging
logging.basicConfig(level=os.getenv("LOG_LEVEL", "WARNING").upper())
logger = logging.getLogger(__name__)


class Settings:
    """Engine settings and environment variables"""

    # Numeric verification
    DEFAULT_SEED: int = int(os.getenv("DEFAULT_SEED", "0"))
    RESIDUAL_TOL: float = float(os.getenv("RESIDUAL_TOL", "1e-8"))  # Relative residual for passing reports
    CLUSTER_SEPARATION: float = float(os.getenv("CLUSTER_SEPARATION", "1e-6"))  # Root clusters closer than this are ambiguous
    ZERO_CUTOFF: float = float(os.getenv("ZERO_CUTOFF", "1e-10"))  # Magnitude treated as a zero coordinate
    MAX_RESAMPLES: int = int(os.getenv("MAX_RESAMPLES", "5"))

    # Exact engine
    MAX_AMBIENT_DIM: int = int(os.getenv("MAX_AMBIENT_DIM", "6"))  # Largest ambient dimension hull accepts
    MAX_WORKERS: int = int(os.getenv("MAX_WORKERS", "1"))  # 1 = sequential subset/stratum sums

    # Monitoring
    SLOW_OPERATION_SECONDS: float = float(os.getenv("SLOW_OPERATION_SECONDS", "5.0"))

    # Bundled sample inputs for the worked examples
    DATA_DIR: Path = Path(os.getenv("DATA_DIR", str(Path(__file__).resolve().parent.parent / "data")))

    # App Configuration
    APP_NAME: str = "Newton Polytope Invariants"
    APP_VERSION: str = "1.0.0"

    def validate(self) -> None:
        """Validate numeric settings"""
        if self.RESIDUAL_TOL <= 0 or self.CLUSTER_SEPARATION <= 0 or self.ZERO_CUTOFF <= 0:
            raise RuntimeError("Tolerances must be positive")
        if self.MAX_RESAMPLES < 0:
            raise RuntimeError("MAX_RESAMPLES cannot be negative")
        if self.MAX_WORKERS < 1:
            raise RuntimeError("MAX_WORKERS must be at least 1")
        if self.MAX_AMBIENT_DIM < 1:
            raise RuntimeError("MAX_AMBIENT_DIM must be at least 1")

    def is_parallel(self) -> bool:
        """Check if subset and stratum sums may fan out to worker threads"""
        return self.MAX_WORKERS > 1


# Global settings instance
settings = Settings()
