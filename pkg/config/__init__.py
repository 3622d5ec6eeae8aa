from .settings import get_settings, load_run_settings, RunSettings

__all__ = [
    'get_settings',
    'load_run_settings',
    'RunSettings',
]
