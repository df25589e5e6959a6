# lieinv/errors.py

"""
lieinv 예외 모음

모든 입력 오류는 LieInvError를 상속하고, CLI 종료 코드(exit_code)를 함께 가진다.
- 0 : 성공
- 1 : 표와 계산 결과 불일치 (MISMATCH)
- 2 : 사용법/설정 오류
- 3 : 입력 오류 (잘못된 case id, 파라미터 범위, 파일 파싱 실패 등)
"""

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class LieInvError(Exception):
    exit_code = EXIT_INPUT


class ConfigError(LieInvError):
    exit_code = EXIT_USAGE


class UnknownCaseError(LieInvError):
    pass


class ParameterOutOfRangeError(LieInvError):
    pass


class AlgebraParseError(LieInvError):
    def __init__(self, message: str, line_no: int = 0):
        self.line_no = line_no
        if line_no:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class FormParseError(LieInvError):
    pass


class JacobiError(LieInvError):
    pass


class DimensionMismatchError(LieInvError):
    pass


class FormNotClosedError(LieInvError):
    pass


class NotAlmostComplexError(LieInvError):
    pass


class NotIntegrableError(LieInvError):
    def __init__(self, message: str, failing_bracket=None):
        self.failing_bracket = failing_bracket
        super().__init__(message)


class NotDirectSumError(LieInvError):
    pass


class NotAutomorphismError(LieInvError):
    pass


class UnknownTemplateError(LieInvError):
    pass


class AsymmetricMetricError(LieInvError):
    pass


class TablesError(LieInvError):
    pass
