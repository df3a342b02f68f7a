from hypothesis import settings

# reproducible runs: hypothesis explores a fixed sequence of examples
settings.register_profile("default", derandomize=True, deadline=None)
settings.load_profile("default")
