"""Progress logs and result files."""
