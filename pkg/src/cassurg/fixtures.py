"""Bundled PD-code fixtures.

The Borromean-rings file is convention-bearing: the orientations encoded
there anchor the sign calibrations of the triple linking number and of the
mixed Alexander derivative (see its ``notes`` field).  Everything else is a
plain reference diagram.
"""

from __future__ import annotations

from importlib import resources

from .diagram import FramedLinkDiagram, parse_pd

_NAMES = ("unknot", "unknot_kink", "trefoil_right", "figure_eight",
          "hopf_positive", "borromean_rings", "unlink2", "unlink3",
          "borromean_meridian")


def fixture_names() -> tuple[str, ...]:
    return _NAMES


def load(name: str) -> FramedLinkDiagram:
    if name not in _NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {_NAMES}")
    text = resources.files("cassurg.data").joinpath(f"{name}.json").read_text()
    return parse_pd(text)


def unknot() -> FramedLinkDiagram:
    return load("unknot")


def unknot_kink() -> FramedLinkDiagram:
    return load("unknot_kink")


def trefoil_right() -> FramedLinkDiagram:
    return load("trefoil_right")


def figure_eight() -> FramedLinkDiagram:
    return load("figure_eight")


def hopf_positive() -> FramedLinkDiagram:
    return load("hopf_positive")


def borromean_rings() -> FramedLinkDiagram:
    return load("borromean_rings")


def unlink(n: int) -> FramedLinkDiagram:
    if n == 2:
        return load("unlink2")
    if n == 3:
        return load("unlink3")
    return FramedLinkDiagram.build([], [[k] for k in range(1, n + 1)])


def borromean_meridian() -> FramedLinkDiagram:
    return load("borromean_meridian")
