class HBError(Exception):
    '''Base class for every failure raised by the diagram toolkit.'''


class InsufficientPrefixError(HBError):
    def __init__(self, have: int, need: int, what: str = 'prefix'):
        self.have = have
        self.need = need
        super().__init__(f'insufficient {what}: have {have} letters, need {need}')


class CertificationError(HBError):
    def __init__(self, k: int, observed: int, expected: int):
        self.k = k
        self.observed = observed
        self.expected = expected
        super().__init__(
            f'complexity mismatch at length {k}: observed {observed}, '
            f'expected {expected} (prefix too short?)'
        )


class BlockNotInLanguageError(HBError):
    def __init__(self, block: str):
        self.block = block
        super().__init__(f'block not in language: {block!r}')


class HorizonError(HBError):
    def __init__(self, need: int, max_len: int):
        self.need = need
        self.max_len = max_len
        super().__init__(
            f'horizon exceeds table: need blocks of length {need}, '
            f'table stops at {max_len}'
        )


class DepthRangeError(HBError, ValueError):
    def __init__(self, n: int, low: int, high: int):
        self.n = n
        super().__init__(f'length {n} out of range [{low}, {high}]')


class DirectiveExhaustedError(HBError):
    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f'directive exhausted: term d_{needed} requested, '
            f'only {available} supplied and no periodic tail'
        )


class NotProlongableError(HBError):
    def __init__(self, seed: str, image: str):
        super().__init__(f'not prolongable: image of {seed!r} is {image!r}')


class DepthBoundError(HBError):
    def __init__(self, n: int, depth_bound: int):
        self.n = n
        self.depth_bound = depth_bound
        super().__init__(
            f'depth bound too small for requested n: n={n}, '
            f'diagram depth bound {depth_bound}'
        )


class StructuralError(HBError):
    '''A construction produced something its defining lemma rules out.'''


class ConfigError(HBError):
    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f'{field}: {message}')
