"""Virtual knot invariants from group biquandles built on Wada's braid representations."""

__version__ = "0.1.0"
