"""Rule-engine errors shared by the mini-games and mapped to HTTP statuses."""


class EngineError(Exception):
    """Base for all rule violations raised by the game engines."""


class InvalidMove(EngineError):
    """The move itself is not allowed (bad gate, occupied slot, ...)."""


class SessionFinished(EngineError):
    """A move arrived after the session reached a terminal status."""


class NotWonYet(EngineError):
    """A score was requested for a session that has not been won."""
