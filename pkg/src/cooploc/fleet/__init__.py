"""Ground-truth fleet motion."""
