"""
Checkpointed Goldbach verification sweep.

Pair counts for the whole run come from one shared read-only table. Worker
threads summarise chunks of it; the calling thread owns the checkpoint and
commits chunks strictly in order, so the file on disk always describes
a contiguous verified prefix [4, verified_upto].
"""

import os
import re
import tempfile
import threading
from collections import deque
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterator, Optional, Tuple

import numpy as np
import psutil
from dateutil.parser import isoparse

from core.errors import CheckpointError, CounterexampleError, DomainError
from core.goldbach import first_unpaired, pair_count_table
from core.sieve import prime_mask_upto
from utils.config import Config
from utils.logger import get_logger

SCHEMA_VERSION = 1
MAX_SWEEP_TARGET = 2 ** 63 - 1

_NUMBER = r"(0|[1-9][0-9]*)"
_HEADER = re.compile(r"GOLDBACH-CKPT ([1-9][0-9]*)")
_VERIFIED = re.compile(rf"verified_upto={_NUMBER}")
_MIN_PAIRS = re.compile(rf"min_pairs={_NUMBER}@{_NUMBER}")
_UPDATED = re.compile(r"updated=(\S+)")


@dataclass(frozen=True)
class VerificationCheckpoint:
    """Durable frontier of a sweep: every even 2m in [4, verified_upto] has a prime pair"""
    verified_upto: int
    min_pair_count: int
    min_pair_at: int
    updated_at: datetime
    started_at: Optional[datetime] = None
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.verified_upto < 4 or self.verified_upto % 2:
            raise CheckpointError(f"verified_upto must be even and >= 4, got {self.verified_upto}")

    def advance(self, upto: int, count: int, at: int) -> "VerificationCheckpoint":
        """Move the frontier forward, keeping the smallest pair count seen"""
        if upto < self.verified_upto:
            raise CheckpointError(f"frontier cannot move back from {self.verified_upto} to {upto}")
        if count < self.min_pair_count:
            return replace(self, verified_upto=upto, min_pair_count=count,
                           min_pair_at=at, updated_at=_utc_now())
        return replace(self, verified_upto=upto, updated_at=_utc_now())


@dataclass(frozen=True)
class ChunkResult:
    lo: int
    hi: int
    min_count: int
    min_at: int
    unpaired: Optional[int]


def _utc_now() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


def format_checkpoint(ckpt: VerificationCheckpoint) -> str:
    stamp = ckpt.updated_at.astimezone(timezone.utc).strftime('%Y-%m-%dT%H:%M:%SZ')
    return (
        f"GOLDBACH-CKPT {ckpt.schema_version}\n"
        f"verified_upto={ckpt.verified_upto}\n"
        f"min_pairs={ckpt.min_pair_count}@{ckpt.min_pair_at}\n"
        f"updated={stamp}\n"
    )


def parse_checkpoint(text: str) -> VerificationCheckpoint:
    """Strict parser: four LF-terminated lines, known schema only"""
    if not text.endswith("\n"):
        raise CheckpointError("checkpoint is truncated (missing final newline)")
    lines = text[:-1].split("\n")
    if len(lines) != 4:
        raise CheckpointError(f"checkpoint must have 4 lines, found {len(lines)}")

    header = _HEADER.fullmatch(lines[0])
    if not header:
        raise CheckpointError(f"not a Goldbach checkpoint: {lines[0]!r}")
    version = int(header.group(1))
    if version != SCHEMA_VERSION:
        raise CheckpointError(f"unknown checkpoint schema version {version}; refusing to resume")

    verified = _VERIFIED.fullmatch(lines[1])
    min_pairs = _MIN_PAIRS.fullmatch(lines[2])
    updated = _UPDATED.fullmatch(lines[3])
    if not (verified and min_pairs and updated):
        raise CheckpointError("malformed checkpoint body")

    try:
        updated_at = isoparse(updated.group(1))
    except ValueError as e:
        raise CheckpointError(f"bad timestamp {updated.group(1)!r}: {e}") from e
    if updated_at.utcoffset() is None or updated_at.utcoffset().total_seconds() != 0:
        raise CheckpointError(f"timestamp {updated.group(1)!r} is not UTC")

    return VerificationCheckpoint(
        verified_upto=int(verified.group(1)),
        min_pair_count=int(min_pairs.group(1)),
        min_pair_at=int(min_pairs.group(2)),
        updated_at=updated_at,
        schema_version=version,
    )


def read_checkpoint(path) -> Optional[VerificationCheckpoint]:
    """Load a checkpoint; None when the file does not exist"""
    path = Path(path)
    if not path.exists():
        return None
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise CheckpointError(f"cannot read checkpoint {path}: {e}") from e
    return parse_checkpoint(text)


def write_checkpoint(path, ckpt: VerificationCheckpoint) -> None:
    """Atomic replace: write a temp file beside the target, fsync, rename"""
    path = Path(path)
    tmp_name = None
    try:
        with tempfile.NamedTemporaryFile(
            "w", encoding="ascii", newline="\n", dir=path.parent or ".",
            prefix=f".{path.name}.", suffix=".tmp", delete=False
        ) as tmp:
            tmp_name = tmp.name
            tmp.write(format_checkpoint(ckpt))
            tmp.flush()
            os.fsync(tmp.fileno())
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise CheckpointError(f"cannot write checkpoint {path}: {e}") from e


def default_workers() -> int:
    return psutil.cpu_count(logical=False) or os.cpu_count() or 1


def sweep_memory_bytes(stop: int) -> int:
    """Peak working set of a sweep to stop: prime mask, FFT buffers and count table"""
    fft_size = 1 << (2 * (stop + 1) - 1).bit_length()
    return (stop + 1) + 4 * 8 * fft_size + 8 * (stop + 1)


def iter_chunks(first: int, stop: int, stride: int) -> Iterator[Tuple[int, int]]:
    """Even-aligned chunks of stride even numbers covering [first, stop], in order"""
    for lo in range(first, stop + 1, 2 * stride):
        yield lo, min(lo + 2 * (stride - 1), stop)


def count_chunk(pair_counts: np.ndarray, lo: int, hi: int) -> ChunkResult:
    """Summarise the even numbers of [lo, hi] from a shared pair-count table"""
    counts = pair_counts[lo : hi + 1 : 2]
    best = int(counts.argmin())
    return ChunkResult(
        lo=lo,
        hi=hi,
        min_count=int(counts[best]),
        min_at=lo + 2 * best,
        unpaired=first_unpaired(counts, lo),
    )


class GoldbachVerifier:
    """Runs a resumable, chunked Goldbach sweep"""

    def __init__(self, config, logger):
        self.config = config
        self.logger = logger

    def ceiling(self) -> int:
        return min(self.config.sweep.max_target, MAX_SWEEP_TARGET)

    def _validate(self, start, stop, workers, stride):
        for name, value in (("from", start), ("to", stop)):
            if not isinstance(value, int) or value < 4 or value % 2:
                raise DomainError(f"--{name} must be an even integer >= 4, got {value}")
        if start > stop:
            raise DomainError(f"--from {start} exceeds --to {stop}")
        if stop > self.ceiling():
            raise DomainError(
                f"--to {stop} exceeds the sweep ceiling {self.ceiling()} (sweep.max_target)"
            )
        needed = sweep_memory_bytes(stop)
        available = psutil.virtual_memory().available
        if needed > available:
            raise DomainError(
                f"--to {stop} needs about {needed >> 20} MiB, only {available >> 20} MiB available"
            )
        if workers < 1:
            raise DomainError(f"workers must be positive, got {workers}")
        if stride < 1:
            raise DomainError(f"stride must be positive, got {stride}")

    def run(self, start: int, stop: int, checkpoint_path, workers: Optional[int] = None,
            stride: Optional[int] = None, stop_event: Optional[threading.Event] = None,
            on_commit: Optional[Callable[[VerificationCheckpoint], None]] = None
            ) -> VerificationCheckpoint:
        """Verify every even number up to stop, resuming from checkpoint_path"""
        workers = workers or self.config.sweep.workers or default_workers()
        stride = stride or self.config.sweep.stride
        stop_event = stop_event or threading.Event()
        self._validate(start, stop, workers, stride)

        ckpt = read_checkpoint(checkpoint_path)
        if ckpt is not None:
            self.logger.info(
                f"Resuming from {checkpoint_path}: verified_upto={ckpt.verified_upto}"
            )
            ckpt = replace(ckpt, started_at=_utc_now())
            if ckpt.verified_upto >= stop:
                return ckpt
            first = ckpt.verified_upto + 2
        else:
            first = 4
        if start > first:
            self.logger.info(f"Extending the verified prefix from {first} up to --from {start}")

        chunk_count = -(-((stop - first) // 2 + 1) // stride)
        self.logger.info(
            f"Sweeping [{first}, {stop}] in {chunk_count} chunks with {workers} workers"
        )

        # one convolution for the whole run; workers only read slices of it
        prime_mask = prime_mask_upto(stop, self.config.sweep.segment_size)
        pair_counts = pair_count_table(prime_mask, stop)
        del prime_mask
        started = ckpt.started_at if ckpt else _utc_now()

        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="SweepWorker") as pool:
            pending = {}
            finished = {}
            in_order = deque()
            queue = iter_chunks(first, stop, stride)

            def submit_next():
                chunk = next(queue, None)
                if chunk is not None:
                    pending[pool.submit(count_chunk, pair_counts, *chunk)] = chunk
                    in_order.append(chunk)

            for _ in range(2 * workers):
                submit_next()

            try:
                while pending and not stop_event.is_set():
                    done, _ = wait(pending, return_when=FIRST_COMPLETED)
                    for future in done:
                        chunk = pending.pop(future)
                        finished[chunk] = future.result()
                        submit_next()

                    while in_order and in_order[0] in finished:
                        result = finished.pop(in_order.popleft())
                        ckpt = self._commit(ckpt, result, started, checkpoint_path)
                        if on_commit:
                            on_commit(ckpt)
                        if stop_event.is_set():
                            break
            except KeyboardInterrupt:
                self.logger.info("Sweep interrupted; last checkpoint is intact")
                stop_event.set()
                raise
            finally:
                for future in pending:
                    future.cancel()

        if stop_event.is_set() and (ckpt is None or ckpt.verified_upto < stop):
            self.logger.info(f"Sweep stopped at verified_upto={ckpt.verified_upto if ckpt else 'none'}")
        return ckpt

    def _commit(self, ckpt, result: ChunkResult, started, checkpoint_path):
        if result.unpaired is not None:
            # the chunk is not committed; the file keeps the previous frontier
            n = result.unpaired
            self.logger.info(f"Counterexample: {n} is not a sum of two primes")
            raise CounterexampleError(
                f"{n} has no Goldbach pair",
                report={"even_target": n,
                        "verified_upto": ckpt.verified_upto if ckpt else None},
            )

        if ckpt is None:
            ckpt = VerificationCheckpoint(
                verified_upto=result.hi,
                min_pair_count=result.min_count,
                min_pair_at=result.min_at,
                updated_at=_utc_now(),
                started_at=started,
            )
        else:
            ckpt = ckpt.advance(result.hi, result.min_count, result.min_at)
        write_checkpoint(checkpoint_path, ckpt)
        self.logger.info(
            f"Checkpoint: verified_upto={ckpt.verified_upto} "
            f"min_pairs={ckpt.min_pair_count}@{ckpt.min_pair_at}"
        )
        return ckpt


def verify_range(start: int, stop: int, checkpoint, workers: Optional[int] = None,
                 stride: Optional[int] = None, config=None, logger=None,
                 stop_event: Optional[threading.Event] = None) -> VerificationCheckpoint:
    """Functional entry point around GoldbachVerifier.run"""
    return GoldbachVerifier(config or Config(), logger or get_logger()).run(
        start, stop, checkpoint, workers=workers, stride=stride, stop_event=stop_event
    )
