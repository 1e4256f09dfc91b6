"""
应用配置管理
"""

from typing import Optional, List
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class OracleSettings(BaseSettings):
    """穷举 oracle 配置"""

    partition_cap: int = Field(default=14, ge=1, description="枚举划分时允许的最大玩家数")
    sat_cap: int = Field(default=20, ge=0, description="暴力 SAT 允许的最大变量数")
    ir_prefilter: bool = Field(default=True, description="NS/IS/核心搜索前先按 IR 剪枝")

    model_config = SettingsConfigDict(env_prefix="HEDONIC_ORACLE_")


class StabilitySettings(BaseSettings):
    """稳定性检查配置"""

    core_cap: int = Field(default=20, ge=1, description="核心检查枚举子集时的最大玩家数")

    model_config = SettingsConfigDict(env_prefix="HEDONIC_STABILITY_")


class DynamicsSettings(BaseSettings):
    """偏离动力学配置"""

    default_max_steps: int = Field(default=10000, ge=1)
    rule: str = Field(default="smallest-mover-first")

    model_config = SettingsConfigDict(env_prefix="HEDONIC_DYNAMICS_")


class GeneratorSettings(BaseSettings):
    """随机实例生成配置"""

    tie_probability: float = Field(default=0.0, ge=0.0, le=1.0)
    unacceptability_probability: float = Field(default=0.3, ge=0.0, le=1.0)
    default_seed: int = Field(default=0)

    model_config = SettingsConfigDict(env_prefix="HEDONIC_GENERATOR_")


class LoggingSettings(BaseSettings):
    """日志配置"""

    level: str = Field(default="INFO")
    format: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    file_path: Optional[str] = Field(default=None)
    max_file_size: int = Field(default=10 * 1024 * 1024)  # 10MB
    backup_count: int = Field(default=5)

    model_config = SettingsConfigDict(env_prefix="HEDONIC_LOG_")


class AppSettings(BaseSettings):
    """应用主配置"""

    # 应用基本信息
    app_name: str = Field(default="Hedonic Games API")
    version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)

    # API配置
    api_prefix: str = Field(default="/api/v1")
    cors_origins: List[str] = Field(default=["*"])

    # 子配置
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    stability: StabilitySettings = Field(default_factory=StabilitySettings)
    dynamics: DynamicsSettings = Field(default_factory=DynamicsSettings)
    generator: GeneratorSettings = Field(default_factory=GeneratorSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    model_config = SettingsConfigDict(
        env_prefix="HEDONIC_",
        env_file=[".env", ".env.development", ".env.production"],
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # 忽略额外的环境变量
    )


# 全局配置实例
settings = AppSettings()


def get_settings() -> AppSettings:
    """获取应用配置"""
    return settings
