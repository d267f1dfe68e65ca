"""Measurement models: GPS, inter-vehicle range and azimuth."""
