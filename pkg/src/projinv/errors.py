"""Exception types shared across the package."""

from __future__ import annotations


class ProjInvError(Exception):
    """Base class for all errors raised by projinv."""


class DegenerateDenominator(ProjInvError, ZeroDivisionError):
    """A rational invariant was evaluated where its denominator vanishes."""


class ThreeCollinear(ProjInvError, ValueError):
    """Four points that should form a projective frame contain a collinear triple."""


class DegenerateInput(ProjInvError, ValueError):
    """Input configuration lies outside the locus an operation supports."""


class ResamplingExhausted(ProjInvError, RuntimeError):
    """The random generator hit its retry cap; usually the coordinate bound is too small."""


class TooFewPoints(ProjInvError, ValueError):
    pass


class ParseError(ProjInvError, ValueError):
    pass
