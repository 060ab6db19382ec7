# errors.py - exception classes shared by the folcone modules
"exception classes shared by the folcone modules"
#
# Every error belongs to one family, and each family maps to exactly one
# exit code of folconetool.py:
#
#   ValidationError      1   the input or the request is not acceptable
#   MathematicalFailure  2   the input is acceptable, the mathematics fails
#   InputError           3   the input could not be read at all

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_MATH = 2
EXIT_INPUT = 3


class FolconeError(Exception):
    "Base class for folcone errors"
    exit_code = EXIT_MATH

    def __init__(self, msg):
        super(FolconeError, self).__init__(msg)
        self.msg = msg

    def __str__(self):
        return self.msg


class ValidationError(FolconeError):
    "The input or the request is not acceptable"
    exit_code = EXIT_VALIDATION


class MathematicalFailure(FolconeError):
    "The input is acceptable, but the mathematics fails"
    exit_code = EXIT_MATH


class InputError(FolconeError):
    "The input could not be read"
    exit_code = EXIT_INPUT


# validation errors, markov systems

class DuplicateLetter(ValidationError):
    "Class DuplicateLetter"


class BadLetterName(ValidationError):
    "Class BadLetterName"


class BadRank(ValidationError):
    "Class BadRank"


class DanglingTransition(ValidationError):
    "Class DanglingTransition"


class DuplicateTransition(ValidationError):
    "Class DuplicateTransition"


class ZeroClassLoop(ValidationError):
    "An elementary circuit with zero total class"

    def __init__(self, msg, word=()):
        super(ZeroClassLoop, self).__init__(msg)
        self.word = tuple(word)


class IllegalTransition(ValidationError):
    "Class IllegalTransition"


class EmptyWord(ValidationError):
    "Class EmptyWord"


class BudgetExceeded(ValidationError):
    "An enumeration would exceed the configured cap"

    def __init__(self, msg, cap=None):
        super(BudgetExceeded, self).__init__(msg)
        self.cap = cap


class BadLength(ValidationError):
    "Class BadLength"


class ProductTypeSystem(ValidationError):
    "The system has no cycles"


# validation errors, cones

class RankMismatch(ValidationError):
    "Class RankMismatch"


class DegenerateInput(ValidationError):
    "Class DegenerateInput"


class ZeroVectorInput(ValidationError):
    "Class ZeroVectorInput"


class ZeroRay(ValidationError):
    "The zero vector spans no ray"


class BadFacet(ValidationError):
    "Class BadFacet"


class BadHeight(ValidationError):
    "Class BadHeight"


class DegeneratePlane(ValidationError):
    "Class DegeneratePlane"


# validation errors, documents and command line

class SchemaError(ValidationError):
    "A well-formed document with a bad field"

    def __init__(self, path, explanation=None):
        msg = 'bad field %s' % path
        if explanation:
            msg += ': %s' % explanation
        super(SchemaError, self).__init__(msg)
        self.path = path
        self.explanation = explanation


class UsageError(ValidationError):
    "Bad command line"


# mathematical failures

class NoTransverseClass(MathematicalFailure):
    "No class is strictly positive on every minimal loop"

    def __init__(self, msg, certificate=None):
        super(NoTransverseClass, self).__init__(msg)
        self.certificate = certificate


class FamilyViolation(MathematicalFailure):
    "Distinct systems whose foliation cones share interior points"

    def __init__(self, msg, pairs=()):
        super(FamilyViolation, self).__init__(msg)
        self.pairs = tuple(pairs)


class CertificateError(MathematicalFailure):
    "A certificate failed exact re-verification"


# input errors

class SystemSyntaxError(InputError):
    "Position-annotated syntax error in a document"

    def __init__(self, line, column, explanation):
        super(SystemSyntaxError, self).__init__(
            'syntax error at line %d column %d: %s' %
            (line, column, explanation))
        self.line = line
        self.column = column
        self.explanation = explanation


class FileAccessError(InputError):
    "Class FileAccessError"


# not fatal, reported inside simulation reports

class NoReturn(FolconeError):
    "An orbit that never revisits its initial letter"
