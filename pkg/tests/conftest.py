from hypothesis import strategies as st

from fock_mullineux import Partition


def partitions_st(max_part: int = 6, max_len: int = 8):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )
