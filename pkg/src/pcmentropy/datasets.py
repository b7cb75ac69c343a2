"""Bundled sample matrices."""

from importlib import resources

from .pcm import Pcm, parse_pcm


def tennis() -> Pcm:
    """Incomplete 6-player win-ratio matrix; pairs who never met are zero."""
    text = resources.files("pcmentropy").joinpath("data/tennis.csv").read_text()
    return parse_pcm(text, "csv")
