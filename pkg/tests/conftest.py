import hypothesis.strategies as st

from toruscover import BraidWord


def letters_strategy(degree: int, max_length: int):
    return st.lists(
        st.tuples(st.integers(1, degree - 1), st.sampled_from((1, -1))),
        max_size=max_length,
    )


def braid_words(min_degree: int = 2, max_degree: int = 5, max_length: int = 10):
    """Random braid words with degree carried explicitly."""
    return st.integers(min_degree, max_degree).flatmap(
        lambda m: letters_strategy(m, max_length).map(
            lambda ls: BraidWord(m, tuple(ls))
        )
    )
