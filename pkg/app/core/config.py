from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    # App Config
    APP_TITLE: str = "Propus: symmetric Hadamard construction toolkit"
    LOG_LEVEL: str = "INFO"

    # Matrix / field bounds
    MAX_ORDER: int = 10000

    # Search
    SEARCH_WORKERS: int = 4
    SEARCH_PREFIX_LEN: int = 2
    SEARCH_NODE_BUDGET: int = 1 << 24

    # Coverage report
    REPORT_SEARCH_BUDGET: int = 1 << 20
    REPORT_PROPUS_SEARCH_MAX_N: int = 9

    # Catalog
    CATALOG_PATH: str = ""


settings = Settings()
