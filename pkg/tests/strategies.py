import hypothesis.strategies as st


@st.composite
def dyck_words(draw, max_semilength=8):
    """A valid Dyck word, built step by step so no filtering is wasted."""
    n = draw(st.integers(min_value=0, max_value=max_semilength))
    chars = []
    open_ = 0
    ups_left = n
    for _ in range(2 * n):
        if open_ == 0:
            c = "U"
        elif ups_left == 0:
            c = "D"
        else:
            c = draw(st.sampled_from("UD"))
        chars.append(c)
        if c == "U":
            open_ += 1
            ups_left -= 1
        else:
            open_ -= 1
    return "".join(chars)


@st.composite
def perm_tuples(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return tuple(draw(st.permutations(list(range(1, n + 1)))))
