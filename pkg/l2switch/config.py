from pathlib import Path

from l2switch.catalog.families import SwitchingFamily
from l2switch.errors import DomainError
from l2switch.reduce.search import DEFAULT_DEPTH

FORMATS = ('graph6', 'edges')

class RunConfig:
    """ Settings of one command-line run.  Identical settings give identical
    output files; the worker count never changes them. """

    def __init__(self, command, family=None, depth=None, workers=None, limit=None,
                 time_budget=None, seed=None, inputs=None, out=None, fmt=None,
                 check_counts=False, verbose=False):
        # set defaults
        if depth is None:
            depth = DEFAULT_DEPTH
        if workers is None:
            workers = 1
        if seed is None:
            seed = 0
        if inputs is None:
            inputs = []
        if fmt is None:
            fmt = 'graph6'
        if isinstance(family, str):
            family = SwitchingFamily.parse(family)

        # validate input
        if depth < 1:
            raise DomainError(f'Depth bound must be at least 1, got {depth}.')
        if workers < 1:
            raise DomainError(f'Worker count must be at least 1, got {workers}.')
        if limit is not None and limit < 1:
            raise DomainError(f'Limit must be at least 1, got {limit}.')
        if time_budget is not None and time_budget <= 0:
            raise DomainError(f'Time budget must be positive, got {time_budget}.')
        if fmt not in FORMATS:
            raise DomainError(f'Unknown output format {fmt!r}; expected one of {FORMATS}.')
        for path in inputs:
            if not Path(path).is_file():
                raise DomainError(f'Input file {path} does not exist.')

        # save settings
        self.command = command
        self.family = family
        self.depth = depth
        self.workers = workers
        self.limit = limit
        self.time_budget = time_budget
        self.seed = seed
        self.inputs = [Path(elem) for elem in inputs]
        self.out = None if out is None else Path(out)
        self.fmt = fmt
        self.check_counts = check_counts
        self.verbose = verbose

    @classmethod
    def from_args(cls, args):
        return cls(
            command=args.command,
            family=getattr(args, 'family', None),
            depth=getattr(args, 'depth', None),
            workers=getattr(args, 'workers', None),
            limit=getattr(args, 'limit', None),
            time_budget=getattr(args, 'time_budget', None),
            seed=getattr(args, 'seed', None),
            inputs=getattr(args, 'inputs', None),
            out=getattr(args, 'out', None),
            fmt=getattr(args, 'format', None),
            check_counts=getattr(args, 'check_counts', False),
            verbose=getattr(args, 'verbose', False)
        )

    def require_family(self):
        if self.family is None:
            raise DomainError(f'Command {self.command!r} needs --family.')
        return self.family

    def __repr__(self):
        return (f'RunConfig(command={self.command!r}, family={self.family}, depth={self.depth}, '
                f'workers={self.workers}, limit={self.limit}, seed={self.seed})')
