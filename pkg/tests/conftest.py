import os

from hypothesis import settings, HealthCheck

settings.register_profile('glmn_cb', derandomize=True, max_examples=500,
                          deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('quick', derandomize=True, max_examples=50,
                          deadline=None)
settings.load_profile(os.environ.get('GLMN_CB_HYPOTHESIS_PROFILE', 'glmn_cb'))
