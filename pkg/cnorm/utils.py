import logging
import math
import time
from functools import wraps

logger = logging.getLogger(__name__)


def two_adic_valuation(number: int) -> int:
    """
    The exponent of the largest power of two dividing a positive integer.

    Args:
        number: A positive integer.

    Returns:
        int: alpha such that number = 2^alpha * m with m odd.
    """
    alpha = 0
    while number % 2 == 0:
        number //= 2
        alpha += 1
    return alpha


def factorial_exceeds(n: int, bound: int) -> bool:
    """
    Whether n! > bound, without computing n! past the bound.

    Args:
        n: A nonnegative integer.
        bound: The value to compare against.
    """
    product = 1
    for k in range(2, n + 1):
        product *= k
        if product > bound:
            return True
    return product > bound


def is_prime(number: int) -> bool:
    """Whether number is prime."""
    if number < 2:
        return False
    return all(number % k for k in range(2, math.isqrt(number) + 1))


class Timer:
    """
    Context manager to time a task.

    Attributes:
        task_name: The name of the task to log.
        logger: The logger to log the time to. If None nothing is logged.
        round_to: The number of decimal places to round the logged time to.
        duration: The elapsed time in seconds, set on exit.
    """

    def __init__(self, task_name="", logger: logging.Logger = None, round_to=3):
        self.logger = logger
        self.task_name = task_name
        self.round_to = round_to
        self.duration = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.duration = time.perf_counter() - self.start
        if self.logger is not None:
            self.logger.info(
                "%s took %ss.", self.task_name, round(self.duration, self.round_to)
            )


def timer(logger: logging.Logger = None, task_name="", round_to=3):
    """
    Decorator to time a function.

    Args:
        logger: The logger to log the time to.
        task_name: The name of the task to log.
        round_to: The number of decimal places to round the time to.
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            with Timer(logger=logger, task_name=task_name, round_to=round_to):
                return func(*args, **kwargs)

        return wrapper

    return decorator
