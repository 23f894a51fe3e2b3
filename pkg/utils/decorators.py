# utils/decorators.py - Phase Decorators for the Problem Runner
import logging
import time
from functools import wraps

logger = logging.getLogger(__name__)


def timed_phase(name):
    """Decorator to record the wall time of a runner phase in `self.timings`"""
    def decorator(f):
        @wraps(f)
        def decorated_function(self, *args, **kwargs):
            start = time.perf_counter()
            try:
                return f(self, *args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                self.timings[name] = self.timings.get(name, 0.0) + elapsed
                logger.debug(f'Phase {name} took {elapsed:.3f}s')
        return decorated_function
    return decorator


def recoverable(*error_classes):
    """Decorator to turn the given errors into a report warning and a None result"""
    def decorator(f):
        @wraps(f)
        def decorated_function(self, *args, **kwargs):
            try:
                return f(self, *args, **kwargs)
            except error_classes as e:
                logger.warning(f'{f.__name__}: {e}')
                self.warnings.append(f'{e.code}: {e.message}')
                return None
        return decorated_function
    return decorator
