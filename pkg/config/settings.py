"""
Configuration management for the Tutte sign toolkit
"""
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv
import yaml
try:
    from pydantic_settings import BaseSettings
except ImportError:
    from pydantic import BaseSettings
from pydantic import Field


# Load environment variables from .env file
load_dotenv()


class EvaluationConfig(BaseSettings):
    """Exact evaluator and brute-force oracle limits"""
    brute_force_cap: int = Field(default=20)  # max |E| for subset enumeration
    oracle_cap: int = Field(default=1_000_000)  # max colourings / flow assignments
    matroid_enum_cap: int = Field(default=20)

    class Config:
        env_prefix = "EVAL_"


class SignConfig(BaseSettings):
    """Sign dispatch configuration"""
    decider_node_cap: int = Field(default=1_000_000)
    default_method: str = Field(default="auto")  # auto, fp, exact
    matroid_edge_limit: int = Field(default=20)  # above this K/J/L/M report the parity only

    class Config:
        env_prefix = "SIGN_"


class GadgetConfig(BaseSettings):
    """Gadget construction and certification"""
    diamond_iteration_cap: int = Field(default=10_000)
    certify_edge_limit: int = Field(default=256)
    search_depth: int = Field(default=12)
    search_width: int = Field(default=256)
    exponent_cap: int = Field(default=4096)
    gadget_edge_cap: int = Field(default=200_000)  # max edges when expanding an expression

    class Config:
        env_prefix = "GADGET_"


class ReductionConfig(BaseSettings):
    """Sign-oracle to min-cut reduction"""
    # Rationals are kept as text and parsed at the point of use
    heavy_weight: str = Field(default="1")
    light_weight_big_q: str = Field(default="-3/2")
    light_weight_small_q: str = Field(default="-1/2")
    schedule: str = Field(default="validated")  # validated, fixed
    mode: str = Field(default="idealized")  # idealized, gadget
    max_search_steps: int = Field(default=20_000)
    max_thickening: int = Field(default=512)

    class Config:
        env_prefix = "REDUCTION_"


class MapConfig(BaseSettings):
    """Region map scanning"""
    workers: int = Field(default=4)

    class Config:
        env_prefix = "MAP_"


class AppConfig(BaseSettings):
    """Main application configuration"""
    project_root: Path = Field(default=Path(__file__).parent.parent)
    data_dir: Path = Field(default=Path(__file__).parent.parent / "data")
    log_level: str = Field(default="INFO")
    debug: bool = Field(default=False)

    # Sub-configurations
    evaluation: EvaluationConfig = Field(default_factory=EvaluationConfig)
    sign: SignConfig = Field(default_factory=SignConfig)
    gadget: GadgetConfig = Field(default_factory=GadgetConfig)
    reduction: ReductionConfig = Field(default_factory=ReductionConfig)
    map: MapConfig = Field(default_factory=MapConfig)

    class Config:
        env_prefix = "APP_"
        case_sensitive = False


def load_config(config_file: Optional[str] = None) -> AppConfig:
    """
    Load configuration from environment variables and optional YAML file

    Args:
        config_file: Optional YAML configuration file path

    Returns:
        AppConfig: Application configuration object
    """
    if config_file and Path(config_file).exists():
        with open(config_file, 'r') as f:
            config_data = yaml.safe_load(f) or {}

        # Override environment variables with YAML values
        prefixes = {
            "evaluation": "EVAL",
            "sign": "SIGN",
            "gadget": "GADGET",
            "reduction": "REDUCTION",
            "map": "MAP",
        }
        for key, value in config_data.items():
            if isinstance(value, dict):
                prefix = prefixes.get(key, key.upper())
                for sub_key, sub_value in value.items():
                    os.environ[f"{prefix}_{sub_key.upper()}"] = str(sub_value)
            else:
                os.environ[f"APP_{key.upper()}"] = str(value)
        get_config.cache_clear()

    return AppConfig()


@lru_cache(maxsize=1)
def get_config() -> AppConfig:
    """Get the global configuration instance"""
    return load_config()


# Global configuration instance
config = get_config()
