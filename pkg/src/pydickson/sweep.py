import logging
import multiprocessing
import signal
import sys
import traceback
from typing import Any, Callable, List, Sequence, Tuple

from pebble import ProcessPool, sighandler

from .util import constants as C


class Sweep:
    """
    Parallel map over a range of indices.

    The items are cut into contiguous chunks, each chunk is scheduled on a
    Pebble process pool and the chunk results are concatenated in chunk
    order, so the output does not depend on the number of workers.

    Parameters
    ----------
    concurrency : int, default 1
        Number of worker processes. With 1 the chunks run in the calling
        process and no pool is created.
    context : multiprocessing.context.BaseContext, default multiprocessing
        Start method context handed to the pool.

    Notes
    -----
    Work functions must be module-level so they can be pickled. Each worker
    rebuilds the field tower it needs once, through `rdp.build_tower`.
    """

    def __init__(
        self,
        concurrency: int = C.DEFAULT_JOBS,
        context: multiprocessing.context.BaseContext = multiprocessing,
    ) -> None:
        self.logger = logging.getLogger(name="DicksonSweep")

        if concurrency < 1:
            raise ValueError(f"Concurrency must be >= 1, got {concurrency}")
        self.concurrency = concurrency
        self.context = context

    @sighandler((signal.SIGTERM))
    def handle_sigterm(*_):
        raise KeyboardInterrupt

    def chunks(self, items: Sequence[Any]) -> List[Sequence[Any]]:
        n_chunks = max(1, min(len(items), self.concurrency * C.CHUNKS_PER_WORKER))
        size, extra = divmod(len(items), n_chunks)
        out = []
        start = 0
        for i in range(n_chunks):
            stop = start + size + (1 if i < extra else 0)
            out.append(items[start:stop])
            start = stop
        return out

    def chunk_done(self, future):
        try:
            result = future.result()
            self.logger.debug(
                f"Chunk {future.chunk_id} done with {len(result)} results"
            )
        except Exception:
            err_type, err_value, err_traceback = sys.exc_info()
            self.logger.warning(f"Chunk {future.chunk_id} raised {err_type}: {err_value}")
            self.logger.debug(
                f"Chunk {future.chunk_id} backtrace: {''.join(traceback.format_tb(err_traceback))}"
            )

    def map(
        self, fn: Callable[..., List[Any]], items: Sequence[Any], args: Tuple = ()
    ) -> List[Any]:
        """
        Run `fn(chunk, *args)` over every chunk of `items` and concatenate.

        A worker exception is raised again here once the pool is drained.
        """
        chunks = self.chunks(items)
        self.logger.info(
            f"Sweeping {len(items)} items in {len(chunks)} chunks with {self.concurrency} worker(s)"
        )
        if self.concurrency == 1:
            return [r for chunk in chunks for r in fn(chunk, *args)]

        pool = ProcessPool(max_workers=self.concurrency, context=self.context)
        try:
            futures = []
            for i, chunk in enumerate(chunks):
                future = pool.schedule(fn, args=(chunk, *args))
                future.chunk_id = i
                future.add_done_callback(self.chunk_done)
                futures.append(future)
            results = [r for future in futures for r in future.result()]
        except KeyboardInterrupt:
            self.logger.info("KeyboardInterrupt, stopping workers immediately")
            pool.stop()
            pool.join()
            raise
        except Exception:
            self.logger.error(f"Sweep failed: {traceback.format_exc()}")
            pool.stop()
            pool.join()
            raise
        pool.close()
        pool.join()
        self.logger.info(f"Sweep finished, {len(results)} results")
        return results
