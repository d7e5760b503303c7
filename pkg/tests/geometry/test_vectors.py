import pytest

from conetile.field import QF, FieldMismatchError
from conetile.geometry import Ray, Vector, cross, is_rational_ray


def test_cross_of_basis_rays() -> None:
    assert cross(Ray.of(1, 0, 2), Ray.of(0, 1, 2)) == 1


def test_cross_of_ray_with_itself(m1: Ray) -> None:
    assert cross(m1, m1) == 0


def test_cross_of_proportional_irrational_rays() -> None:
    p = Vector(QF.of(1, 2), QF.parse("-3-2*sqrt(2)", 2))
    q = Vector(QF.of(-1, 2), QF.parse("3+2*sqrt(2)", 2))

    assert cross(p, q) == 0


def test_rays_are_stored_in_canonical_scale() -> None:
    assert Ray.of(2, 4, 2) == Ray.of(1, 2, 2)
    assert Ray.of(-2, 4, 2) == Ray.of(-1, 2, 2)
    assert Ray.of(0, -7, 2) == Ray.of(0, -1, 2)
    assert Ray.of(1, 2, 2) != Ray.of(-1, -2, 2)


def test_irrational_scaling_is_canonicalized() -> None:
    root = QF.parse("2*sqrt(2)", 2)

    ray = Ray(root, 2 * root)

    assert ray == Ray.of(1, 2, 2)
    assert is_rational_ray(ray)


@pytest.mark.parametrize(
    "text,expected",
    [("(1, 0)", True), ("(-1, 3+2*sqrt(2))", False), ("(3/2, -1)", True)],
    ids=["axis", "mov-boundary", "fractional"],
)
def test_is_rational_ray(text: str, expected: bool) -> None:
    assert is_rational_ray(Ray.parse(text, 2)) is expected


def test_primitive_integral_vector() -> None:
    assert Ray.parse("(1, 2/3)", 2).primitive() == Vector.of(3, 2, 2)
    assert Ray.parse("(-4, 6)", 2).primitive() == Vector.of(-2, 3, 2)


def test_primitive_rejects_irrational_ray(m1: Ray) -> None:
    with pytest.raises(ValueError, match="irrational"):
        m1.primitive()


def test_zero_ray_is_rejected() -> None:
    with pytest.raises(ValueError, match="nonzero"):
        Ray.of(0, 0, 2)


def test_coordinates_must_share_a_field() -> None:
    with pytest.raises(FieldMismatchError):
        Vector(QF.of(1, 2), QF.of(1, 3))


@pytest.mark.parametrize(
    "text",
    ["1, 2", "(1, 2, 3)", "(1)", "(1, x)"],
    ids=["no-parens", "three", "one", "junk"],
)
def test_parse_rejects_malformed_pairs(text: str) -> None:
    with pytest.raises(ValueError):
        Vector.parse(text, 2)


def test_vector_arithmetic() -> None:
    x = Vector.of(1, 2, 2)
    y = Vector.of(3, -1, 2)

    assert x + y == Vector.of(4, 1, 2)
    assert x - y == Vector.of(-2, 3, 2)
    assert 2 * x == Vector.of(2, 4, 2)
    assert -x == Vector.of(-1, -2, 2)
    assert str(x) == "(1, 2)"
    assert x.is_integral()
    assert Vector.of(0, 0, 2).is_zero()
