"""Bounded log of human-readable experiment progress lines."""

from collections import deque
from typing import Deque, TextIO


class MessageLog:
    """Keeps the most recent progress messages of a run."""

    def __init__(self, max_messages: int = 1000):
        """Initialize the message log.

        Args:
            max_messages: Maximum number of messages kept; older ones are dropped
        """
        self.max_messages = max_messages
        self.messages: Deque[str] = deque(maxlen=max_messages)

    def add_message(self, message: str) -> None:
        """Append a message; empty strings are ignored."""
        if message:
            self.messages.append(message)

    def get_messages(self, count: int | None = None) -> list[str]:
        """Get the most recent messages, oldest first.

        Args:
            count: Number of recent messages to retrieve (None for all)
        """
        if count is None:
            return list(self.messages)
        if count <= 0:
            return []
        return list(self.messages)[-count:]

    def write_to(self, stream: TextIO) -> None:
        """Write every kept message to a text stream, one per line."""
        for message in self.messages:
            stream.write(message + "\n")
