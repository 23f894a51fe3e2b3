# config.py - Runtime configuration for hilbasis
import os

from dotenv import load_dotenv

# Environment variables (and an optional .env file) override the defaults below
load_dotenv()


def _flag(name, default):
    """Read a boolean flag from the environment"""
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Settings shared by the engines and the command line"""

    LOG_LEVEL = os.getenv('HILBASIS_LOG_LEVEL', 'WARNING').upper()

    # Pairing of nonsimplicial facets uses the containment rule while the
    # number of nonsimplicial facets stays below d ** RANK_TEST_EXPONENT
    RANK_TEST_EXPONENT = int(os.getenv('HILBASIS_RANK_TEST_EXPONENT', '3'))

    WEIGHT_RETRIES = int(os.getenv('HILBASIS_WEIGHT_RETRIES', '64'))

    LOCAL_REDUCTION = _flag('HILBASIS_LOCAL_REDUCTION', True)

    DUAL_ORDER = os.getenv('HILBASIS_DUAL_ORDER', 'heuristic')

    JSON_TIMINGS = _flag('HILBASIS_JSON_TIMINGS', False)

    @classmethod
    def rank_test_threshold(cls, dim):
        """Number of nonsimplicial facets from which the rank test is used"""
        return dim ** cls.RANK_TEST_EXPONENT
