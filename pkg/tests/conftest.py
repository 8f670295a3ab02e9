"""Shared fixtures and golden data"""

import pytest

from utils.config import Config
from utils.logger import setup_logger


# Cayley table of the unit group modulo 36, transcribed row by row
TABLE_36 = [
    [1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35],
    [5, 25, 35, 19, 29, 13, 23, 7, 17, 1, 11, 31],
    [7, 35, 13, 5, 19, 11, 25, 17, 31, 23, 1, 29],
    [11, 19, 5, 13, 35, 7, 29, 1, 23, 31, 17, 25],
    [13, 29, 19, 35, 25, 5, 31, 11, 1, 17, 7, 23],
    [17, 13, 11, 7, 5, 1, 35, 31, 29, 25, 23, 19],
    [19, 23, 25, 29, 31, 35, 1, 5, 7, 11, 13, 17],
    [23, 7, 17, 1, 11, 31, 5, 25, 35, 19, 29, 13],
    [25, 17, 31, 23, 1, 29, 7, 35, 13, 5, 19, 11],
    [29, 1, 23, 31, 17, 25, 11, 19, 5, 13, 35, 7],
    [31, 11, 1, 17, 7, 23, 13, 29, 19, 35, 25, 5],
    [35, 31, 29, 25, 23, 19, 17, 13, 11, 7, 5, 1],
]

# Cayley table of the unit group modulo 26
TABLE_26 = [
    [1, 3, 5, 7, 9, 11, 15, 17, 19, 21, 23, 25],
    [3, 9, 15, 21, 1, 7, 19, 25, 5, 11, 17, 23],
    [5, 15, 25, 9, 19, 3, 23, 7, 17, 1, 11, 21],
    [7, 21, 9, 23, 11, 25, 1, 15, 3, 17, 5, 19],
    [9, 1, 19, 11, 3, 21, 5, 23, 15, 7, 25, 17],
    [11, 7, 3, 25, 21, 17, 9, 5, 1, 23, 19, 15],
    [15, 19, 23, 1, 5, 9, 17, 21, 25, 3, 7, 11],
    [17, 25, 7, 15, 23, 5, 21, 3, 11, 19, 1, 9],
    [19, 5, 17, 3, 15, 1, 25, 11, 23, 9, 21, 7],
    [21, 11, 1, 17, 7, 23, 3, 19, 9, 25, 15, 5],
    [23, 17, 11, 5, 25, 19, 7, 1, 21, 15, 9, 3],
    [25, 23, 21, 19, 17, 15, 11, 9, 7, 5, 3, 1],
]

GAMMA_36 = [1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35]
GAMMA_26 = [1, 3, 5, 7, 9, 11, 15, 17, 19, 21, 23, 25]


def trial_division(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@pytest.fixture
def config(tmp_path):
    cfg = Config()
    cfg.sweep.checkpoint_path = str(tmp_path / "goldbach.ckpt")
    cfg.sweep.workers = 2
    return cfg


@pytest.fixture
def logger():
    return setup_logger(level="DEBUG")


@pytest.fixture
def checkpoint_path(tmp_path):
    return tmp_path / "sweep.ckpt"
