"""Deterministic work distribution over forked workers.

Work is split into an ordered list of blocks fixed *before* the degree of
parallelism is chosen; results are consumed strictly in block order and the
consumer stops at the first decisive one.  A run at parallelism 1 therefore
selects exactly the same outcome as a run at parallelism 8 — extra workers
only change how fast the losing blocks are discarded.

Workers receive their context by inheriting this module's globals across
fork, so closures and other unpicklable state travel for free; only block
ids and results cross the pipe.
"""

from __future__ import annotations

import multiprocessing
from collections.abc import Callable, Sequence
from typing import Any

_WORK: tuple[Callable[[Any, Any], Any], Any] | None = None


def _call(block: Any) -> Any:
    fn, ctx = _WORK  # type: ignore[misc]
    return fn(ctx, block)


def run_blocks(fn: Callable[[Any, Any], Any], ctx: Any, blocks: Sequence[Any],
               parallelism: int, *,
               stop: Callable[[Any], bool] = lambda r: False) -> list[Any]:
    """Apply fn(ctx, block) to blocks in order.

    Returns the prefix of results up to and including the first one where
    stop(result) is true (all results if none is decisive).  fn must not
    raise: workers report failures in their return value.
    """
    if parallelism <= 1 or len(blocks) <= 1:
        out: list[Any] = []
        for b in blocks:
            r = fn(ctx, b)
            out.append(r)
            if stop(r):
                break
        return out

    global _WORK
    _WORK = (fn, ctx)
    try:
        workers = min(parallelism, len(blocks))
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            pending = [pool.apply_async(_call, (b,)) for b in blocks]
            pool.close()
            out = []
            for handle in pending:
                r = handle.get()
                out.append(r)
                if stop(r):
                    break
            # Never terminate a pool with tasks still running (that shutdown
            # can deadlock); the losing blocks are budget-bounded, so wait
            # them out and discard their results.
            for handle in pending[len(out):]:
                handle.wait()
            pool.join()
            return out
    except ValueError:
        # platform without fork: fall back to the serial path
        _WORK = None
        return run_blocks(fn, ctx, blocks, 1, stop=stop)
    finally:
        _WORK = None
