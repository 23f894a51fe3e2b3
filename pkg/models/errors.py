# models/errors.py - Exception hierarchy for hilbasis


class HilbasisError(Exception):
    """Base class; `code` is the stable error name reported to users"""

    code = 'HilbasisError'

    def __init__(self, message=None):
        super().__init__(message or self.code)
        self.message = message or self.code


class MathError(HilbasisError):
    """A mathematical precondition of an operation is violated"""

    code = 'MathError'


class ZeroVectorError(MathError):
    code = 'ZeroVector'


class NotSquareError(MathError):
    code = 'NotSquare'


class ZeroConeError(MathError):
    code = 'ZeroCone'


class DimMismatchError(MathError):
    code = 'DimMismatch'


class NotFullDimError(MathError):
    code = 'NotFullDim'


class NotPointedError(MathError):
    code = 'NotPointed'


class UnsortedInputError(MathError):
    code = 'UnsortedInput'


class NotInteriorError(MathError):
    code = 'NotInterior'


class NotHomogeneousError(MathError):
    code = 'NotHomogeneous'


class InputParseError(HilbasisError):
    """Malformed problem file; `line` is 1-based (None at end of file)"""

    code = 'ParseError'

    def __init__(self, message, line=None):
        self.line = line
        where = f'line {line}: ' if line is not None else 'end of input: '
        super().__init__(f'{where}{message}')
