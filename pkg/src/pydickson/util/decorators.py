from functools import wraps

from .enums import Parity
from .exceptions import WrongParity


def parity_of(q: int) -> Parity:
    return Parity.EVEN if q % 2 == 0 else Parity.ODD


def requires_parity(parity: Parity):
    """
    Reject calls whose first argument `q` has the wrong parity.
    """

    def decorator(fn):
        @wraps(fn)
        def wrapper(q, *args, **kw):
            if parity_of(q) != parity:
                raise WrongParity(
                    f"q={q} is {parity_of(q).name.lower()} while `{fn.__name__}` is only valid for {parity.name.lower()} q"
                )
            return fn(q, *args, **kw)

        return wrapper

    return decorator
