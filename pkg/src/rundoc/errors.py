"""Exception hierarchy shared by every rundoc module."""


class RunDocError(Exception):
    """Base class for all errors raised by rundoc."""


class InvalidArgumentError(RunDocError, ValueError):
    pass


class CorruptRunError(RunDocError, ValueError):
    """A run row violates canonical form (bad sum, interior zero run)."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class MhError(RunDocError):
    """Base class for Modified Huffman codec failures."""

    def __init__(self, message, bit_offset=None):
        if bit_offset is not None:
            message = f"{message} (bit offset {bit_offset})"
        super().__init__(message)
        self.bit_offset = bit_offset


class CorruptStreamError(MhError):
    pass


class WidthMismatchError(MhError):
    pass


class UnexpectedEndError(MhError):
    pass


class EncodeRangeError(MhError, ValueError):
    pass


class ParseError(RunDocError):
    """Malformed file content; carries the byte offset where parsing failed."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class TruncatedError(ParseError):
    pass


class CorruptFileError(RunDocError):
    """Structurally readable file whose content is inconsistent."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegenerateFitError(RunDocError, ValueError):
    pass
