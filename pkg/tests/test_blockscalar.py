import numpy as np
import pytest

from arrowdpr1.blockscalar import BlockScalar
from arrowdpr1.errors import DimensionError, SingularScalarError
from arrowdpr1.quaternion import I, J, K, ONE, Quaternion
from arrowdpr1.sampling import singular_nonzero_block


def test_product_is_matrix_product():
    a = BlockScalar([[1.0, 2.0], [3.0, 4.0]])
    b = BlockScalar([[0.0, 1.0], [1.0, 0.0]])
    assert a * b == BlockScalar([[2.0, 1.0], [4.0, 3.0]])
    assert b * a == BlockScalar([[3.0, 4.0], [1.0, 2.0]])
    assert a * b != b * a


def test_quaternion_block_product_order():
    a = BlockScalar(np.array([[I, J], [K, ONE]], dtype=object))
    b = BlockScalar(np.array([[J, ONE], [I, K]], dtype=object))
    got = a * b
    # entry (0,0) = i*j + j*i = k - k = 0
    assert got.entries[0, 0] == Quaternion(0, 0, 0, 0)
    # entry (0,1) = i*1 + j*k = i + i = 2i
    assert got.entries[0, 1] == Quaternion(0, 2, 0, 0)
    # entry (1,0) = k*j + 1*i = -i + i = 0
    assert got.entries[1, 0] == Quaternion(0, 0, 0, 0)
    # entry (1,1) = k*1 + 1*k = 2k
    assert got.entries[1, 1] == Quaternion(0, 0, 0, 2)


def test_conjugate_is_conjugate_transpose():
    b = BlockScalar([[1 + 2j, 3 - 1j], [0 + 1j, 2 + 0j]])
    c = b.conjugate()
    assert c == BlockScalar([[1 - 2j, 0 - 1j], [3 + 1j, 2 - 0j]])
    q = BlockScalar(np.array([[I, J], [K, ONE]], dtype=object))
    cq = q.conjugate()
    assert cq.entries[0, 1] == -K
    assert cq.entries[1, 0] == -J


def test_magnitude_is_frobenius():
    assert BlockScalar([[3.0, 4.0], [0.0, 0.0]]).magnitude() == pytest.approx(5.0)
    q = BlockScalar(np.array([[Quaternion(1, 1, 1, 1), Quaternion(0, 0, 0, 0)],
                              [Quaternion(0, 0, 0, 0), Quaternion(2, 0, 0, 0)]],
                             dtype=object))
    assert q.magnitude() == pytest.approx(np.sqrt(8.0))


def test_inverse_diagonal():
    b = BlockScalar([[2.0, 0.0], [0.0, 4.0]])
    assert b.inverse() == BlockScalar([[0.5, 0.0], [0.0, 0.25]])


def test_inverse_random_residual():
    rng = np.random.default_rng(21)
    for k in (2, 3, 4):
        b = BlockScalar(rng.uniform(-1, 1, size=(k, k)) + 2.0 * np.eye(k))
        ib = b.inverse()
        resid = (b * ib - BlockScalar.identity(k)).magnitude()
        assert resid <= k * 1e-12 * b.magnitude() * ib.magnitude()


def test_quaternion_block_inverse():
    b = BlockScalar(np.array([[Quaternion(2, 1, 0, 0), Quaternion(0, 0, 1, 0)],
                              [Quaternion(0, 0, 0, 1), Quaternion(3, 0, 0, 0)]],
                             dtype=object))
    ib = b.inverse()
    resid = (b * ib - BlockScalar.identity(2, "quaternion")).magnitude()
    assert resid <= 1e-13


def test_singular_block_raises():
    with pytest.raises(SingularScalarError):
        singular_nonzero_block(2).inverse()
    with pytest.raises(SingularScalarError):
        BlockScalar.zeros(3).inverse()
    near = BlockScalar([[1.0, 0.0], [0.0, 1e-14]])
    with pytest.raises(SingularScalarError):
        near.inverse(tol=1e-9)


def test_identity_and_zeros():
    assert BlockScalar.identity(2) == BlockScalar([[1.0, 0.0], [0.0, 1.0]])
    assert BlockScalar.zeros(2) == BlockScalar([[0.0, 0.0], [0.0, 0.0]])
    qi = BlockScalar.identity(2, "quaternion")
    assert qi.entries[0, 0] == ONE and qi.entries[0, 1] == Quaternion(0, 0, 0, 0)
    ci = BlockScalar.identity(2, "complex")
    assert ci.entries.dtype == np.complex128


def test_validation_errors():
    with pytest.raises(DimensionError):
        BlockScalar([[1.0, 2.0]])
    with pytest.raises(DimensionError):
        BlockScalar(np.zeros((0, 0)))
    with pytest.raises(TypeError):
        BlockScalar(np.array([["a", "b"], ["c", "d"]], dtype=object))
    a = BlockScalar([[1.0]])
    b = BlockScalar([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(DimensionError):
        _ = a * b
    q = BlockScalar(np.array([[ONE]], dtype=object))
    with pytest.raises(TypeError):
        _ = a * q


def test_immutability():
    b = BlockScalar([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(AttributeError):
        b.entries = None
    with pytest.raises(ValueError):
        b.entries[0, 0] = 5.0
    src = np.eye(2)
    BlockScalar(src)
    src[0, 0] = 7.0  # the constructor copied; caller's array stays writable


def test_unhashable():
    with pytest.raises(TypeError):
        hash(BlockScalar([[1.0]]))


def test_real_scaling():
    b = BlockScalar([[1.0, 2.0], [3.0, 4.0]])
    assert 2 * b == BlockScalar([[2.0, 4.0], [6.0, 8.0]])
    assert b * 0.5 == BlockScalar([[0.5, 1.0], [1.5, 2.0]])
