from hypothesis import settings

settings.register_profile("ncalg", max_examples=50, deadline=None, derandomize=True)
settings.load_profile("ncalg")
