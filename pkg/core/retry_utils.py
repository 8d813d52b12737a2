"""Bounded resampling for randomized numeric verifications"""

import logging
from typing import Callable, Tuple, Type, TypeVar

from core.exceptions import DegenerateSampleError

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Odd stride; distinct attempts map to distinct seeds
_SEED_STRIDE = 1_000_003


def derive_seed(seed: int, attempt: int) -> int:
    """Seed used for a given attempt; attempt 0 uses the caller's seed unchanged"""
    return seed + attempt * _SEED_STRIDE


def retry_with_resample(
    func: Callable[[int], T],
    seed: int,
    max_retries: int = 5,
    exceptions: Tuple[Type[Exception], ...] = (DegenerateSampleError,)
) -> T:
    """
    Call func with a fresh deterministic seed until it stops hitting degenerate samples.

    Args:
        func: Callable taking the attempt seed
        seed: Base seed of the run
        max_retries: Maximum number of resamples after the first attempt
        exceptions: Exception types that trigger a resample
    """
    for attempt in range(max_retries + 1):
        attempt_seed = derive_seed(seed, attempt)
        try:
            return func(attempt_seed)
        except exceptions as e:
            if attempt >= max_retries:
                logger.error(f"{getattr(func, '__name__', 'sample')} still degenerate after {max_retries} resamples: {str(e)}")
                raise

            logger.warning(f"Attempt {attempt + 1} with seed {attempt_seed} was degenerate: {str(e)}. Resampling")
