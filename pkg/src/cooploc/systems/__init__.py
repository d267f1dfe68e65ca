"""Localization systems: GPS baseline, GR-CL and GLRR-CL."""
