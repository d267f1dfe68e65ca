"""Shared value types and helpers."""
