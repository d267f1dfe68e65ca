"""Configuration files, trajectory ingestion and scenario construction."""
