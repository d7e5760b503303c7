from hypothesis import strategies as st

from conetile.geometry import LatMat, Vector

S = LatMat(0, -1, 1, 0)
T = LatMat(1, 1, 0, 1)
J = LatMat(1, 0, 0, -1)


@st.composite
def lattice_matrices(draw: st.DrawFn, det: int | None = None) -> LatMat:
    """Short words in S, T and J; together they generate GL(2, Z)."""
    word = draw(st.lists(st.sampled_from([S, T, T.inverse(), J]), max_size=8))
    matrix = LatMat.identity()
    for letter in word:
        matrix = matrix @ letter
    if det is not None and matrix.det != det:
        matrix = matrix @ J
    return matrix


@st.composite
def integral_vectors(draw: st.DrawFn, d: int = 2) -> Vector:
    u = draw(st.integers(min_value=-50, max_value=50))
    v = draw(st.integers(min_value=-50, max_value=50))
    return Vector.of(u, v, d)
