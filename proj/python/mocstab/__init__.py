"""Python interface to the characteristics integrator and stability engine."""

try:
    from ._mocstab import *  # noqa: F401,F403
    from ._mocstab import __doc__  # noqa: F401
except ImportError:  # flat layout used by the in-tree test harness
    from _mocstab import *  # noqa: F401,F403
