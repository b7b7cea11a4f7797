import functools
import logging
import multiprocessing as mp

from tqdm import tqdm

def run_tasks(func, tasks, workers=1, desc=None, progress=False, **kwargs):
    """ Maps func over tasks, keeping the input order in the result.  With
    workers > 1 the tasks go to a process pool; func and kwargs must then be
    picklable (module-level functions). """

    tasks = list(tasks)
    worker = functools.partial(func, **kwargs) if kwargs else func
    logging.debug(f'Running {len(tasks)} tasks ({desc}) on {workers} worker(s).')

    if workers <= 1 or len(tasks) <= 1:
        it = map(worker, tasks)
        if progress:
            it = tqdm(it, total=len(tasks), desc=desc)
        return list(it)

    with mp.Pool(min(workers, len(tasks))) as pool:
        it = pool.imap(worker, tasks)
        if progress:
            it = tqdm(it, total=len(tasks), desc=desc)
        return list(it)

def chunk_ranges(total, count):
    # splits range(total) into at most count contiguous (start, stop) pieces
    count = max(1, min(count, total))
    step, extra = divmod(total, count)
    retval = []
    start = 0
    for k in range(count):
        stop = start + step + (1 if k < extra else 0)
        retval.append((start, stop))
        start = stop
    return retval
