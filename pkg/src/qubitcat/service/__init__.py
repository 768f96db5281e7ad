"""HTTP game service: profiles, sessions, moves, quizzes, persistence."""

from .app import create_app

__all__ = ["create_app"]
