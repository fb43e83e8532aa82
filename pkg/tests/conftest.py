"""
测试共用夹具
"""

from typing import Tuple

import numpy as np
import pytest

from lyat.algebra import LYAlgebra, generalized_heisenberg, heisenberg
from lyat.exactlinalg import RATIONAL, FieldSpec, Matrix, invert
from lyat.extension import central_extension
from lyat.representation import Representation, adjoint
from lyat.utils.config import config_manager


@pytest.fixture(autouse=True)
def _reset_config():
    """测试内对配置的修改不外泄"""
    yield
    config_manager.reset()


@pytest.fixture
def QQ():
    return RATIONAL


@pytest.fixture
def F2():
    return FieldSpec.prime(2)


@pytest.fixture
def F3():
    return FieldSpec.prime(3)


@pytest.fixture
def F5():
    return FieldSpec.prime(5)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def h1():
    return heisenberg(1)


@pytest.fixture
def h1_ext():
    """h_1 以中心为核的扩张（ℚ 上）"""
    return central_extension(heisenberg(1))


@pytest.fixture
def h1_ext_f3(F3):
    return central_extension(heisenberg(1, F3))


@pytest.fixture
def g1():
    return generalized_heisenberg(1)


class RepSampler:
    """
    F_3 上随机生成已知满足 R1-R6 的表示

    阿贝尔代数上取可交换的 ρ 或平方为零的 θ，h_1 上取一维标量表示，
    以及伴随表示经随机基变换后的共轭。
    """

    def __init__(self, field: FieldSpec, rng: np.random.Generator):
        self.field = field
        self.rng = rng

    def _int(self, low: int, high: int) -> int:
        return int(self.rng.integers(low, high + 1))

    def _scalar(self):
        return self.field.random_scalar(self.rng)

    def _square(self, m: int) -> Matrix:
        return Matrix.from_rows(self.field, [[self._scalar() for _ in range(m)] for _ in range(m)], m)

    def invertible(self, m: int) -> Tuple[Matrix, Matrix]:
        while True:
            P = self._square(m)
            P_inv = invert(P)
            if P_inv is not None:
                return P, P_inv

    def conjugate(self, r: Representation) -> Representation:
        P, P_inv = self.invertible(r.vdim)

        def conj(x: Matrix) -> Matrix:
            return P @ x @ P_inv

        return Representation(
            r.algebra, r.vdim,
            tuple(conj(x) for x in r.rho),
            tuple(tuple(conj(x) for x in row) for row in r.dmap),
            tuple(tuple(conj(x) for x in row) for row in r.theta),
        )

    def commuting(self, n: int, m: int) -> Representation:
        """阿贝尔代数，ρ(e_i) = c_i A + d_i I，D = θ = 0"""
        f = self.field
        A = self._square(m)
        one = Matrix.identity(f, m)
        rho = [A.scale(self._scalar()) + one.scale(self._scalar()) for _ in range(n)]
        zero = Matrix.zeros(f, m, m)
        return Representation(
            LYAlgebra.abelian(f, n), m,
            tuple(rho),
            tuple(tuple(zero for _ in range(n)) for _ in range(n)),
            tuple(tuple(zero for _ in range(n)) for _ in range(n)),
        )

    def square_zero(self, n: int, m: int) -> Representation:
        """阿贝尔代数，ρ = 0，θ(e_a, e_b) = s_ab N，N^2 = 0，D 由 R1 决定"""
        f = self.field
        N = Matrix.from_rows(f, [[1 if (i, j) == (0, m - 1) else 0 for j in range(m)] for i in range(m)], m)
        s = [[self._scalar() for _ in range(n)] for _ in range(n)]
        zero = Matrix.zeros(f, m, m)
        return self.conjugate(Representation(
            LYAlgebra.abelian(f, n), m,
            tuple(zero for _ in range(n)),
            tuple(tuple(N.scale(s[b][a] - s[a][b]) for b in range(n)) for a in range(n)),
            tuple(tuple(N.scale(s[a][b]) for b in range(n)) for a in range(n)),
        ))

    def heisenberg_scalar(self) -> Representation:
        """h_1 上的一维表示：ρ(e1)、ρ(e2) 任取，ρ(e) = 0"""
        values = [self._scalar(), self._scalar(), 0]
        return Representation.from_functions(
            heisenberg(1, self.field), 1,
            lambda i: [[values[i]]],
            lambda i, j: [[0]],
            lambda i, j: [[0]],
        )

    def adjoint_h1(self) -> Representation:
        return self.conjugate(adjoint(heisenberg(1, self.field)))

    def sample(self, max_n: int = 3, max_m: int = 3) -> Representation:
        kind = self._int(0, 3)
        if kind == 0:
            return self.commuting(self._int(1, max_n), self._int(1, max_m))
        if kind == 1 and max_m >= 2:
            return self.square_zero(self._int(1, max_n), self._int(2, max_m))
        if kind == 2 and max_m >= 3 and max_n >= 3:
            return self.adjoint_h1()
        return self.heisenberg_scalar()


@pytest.fixture
def rep_sampler(F3, rng):
    return RepSampler(F3, rng)
