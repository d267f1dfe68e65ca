"""Cooperative localization toolkit for simulated connected-vehicle fleets."""

__version__ = "0.1.0"
