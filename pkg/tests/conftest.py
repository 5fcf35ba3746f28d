"""Shared test fixtures for wonderful-braid."""

import logging

import pytest

from wonderful_braid.combinatorics.blocks import Block, NestedSet
from wonderful_braid.harness.config import reset_settings


@pytest.fixture(autouse=True)
def _fresh_settings():
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def _detach_log_handlers():
    """main() 会给包 logger 挂 stderr handler，测试之间要摘掉。"""
    yield
    logger = logging.getLogger("wonderful_braid")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def block():
    def make(elements, n):
        return Block.of(elements, n)
    return make


@pytest.fixture
def nested():
    def make(blocks, n):
        return NestedSet.of(blocks, n)
    return make
