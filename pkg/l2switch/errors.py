class SwitchingError(Exception):
    exit_code = 1

class DimensionError(SwitchingError):
    exit_code = 2

class DomainError(SwitchingError):
    exit_code = 2

class CapacityError(SwitchingError):
    exit_code = 3

    def __init__(self, what, size, bound):
        # save settings
        self.what = what
        self.size = size
        self.bound = bound

        super().__init__(f'{what}: size {size} exceeds the supported bound {bound}.')

class AdmissibilityError(SwitchingError):
    exit_code = 4

class PlacementError(SwitchingError):
    exit_code = 4

class ConditionError(SwitchingError):
    exit_code = 4

    def __init__(self, clause, detail):
        self.clause = clause
        self.detail = detail
        super().__init__(f'condition {clause} violated: {detail}')

class CountCheckError(SwitchingError):
    exit_code = 5

    def __init__(self, label, expected, actual):
        self.label = label
        self.expected = expected
        self.actual = actual
        super().__init__(f'{label}: expected {expected}, got {actual}.')
