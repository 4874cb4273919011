from hypothesis import settings

settings.register_profile("pilme", deadline=None)
settings.load_profile("pilme")
