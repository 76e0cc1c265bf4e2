"""Shared error type: every contract violation carries a stable machine code."""


class QuivkitError(Exception):
    """Raised on contract violations.

    `code` is a stable, machine-readable tag (e.g. ``NOT_POINTED``,
    ``NOT_SURJECTIVE``); the message adds human context.
    """

    def __init__(self, code: str, message: str = ""):
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}" if message else code)
