"""Run and peak subalgebras of the descent algebra, computed exactly."""

__version__ = "0.1.0"
