"""Configuration settings for the game decomposition toolkit."""

from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="GAMEDECOMP_",
        case_sensitive=False,
        extra="ignore",
    )

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent.parent
    LOGS_DIR: Path = BASE_DIR / "logs"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_TO_FILE: bool = True

    # Theorem verification
    DEFAULT_TRIALS: int = 100
    DEFAULT_SEED: int = 0

    # Random rationals: numerator in [-B, B], denominator in [1, D]
    RANDOM_NUMERATOR_BOUND: int = 9
    RANDOM_DENOMINATOR_BOUND: int = 4

    # symmetric_space enumerates n! permutations
    SYMMETRIC_MAX_PLAYERS: int = 8


# Global settings instance
settings = Settings()
