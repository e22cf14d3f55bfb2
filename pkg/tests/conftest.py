from hypothesis import settings

# graph construction inside strategies can be slow enough to trip the
# default deadline; exhaustiveness matters more than per-example speed here
settings.register_profile("pkg", deadline=None, max_examples=60)
settings.load_profile("pkg")
