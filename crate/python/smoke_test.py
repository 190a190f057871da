"""Smoke test for the spinweave Python extension."""

import json

import spinweave as sw


def main():
    assert abs(sw.metric_g([1, 0, 0, 0], [1, 0, 0, 0]) - 1) < 1e-15
    assert abs(sw.metric_g([0, 1, 0, 0], [0, 1, 0, 0]) + 1) < 1e-15
    assert sw.clifford_residual([1, 0.2, 0, 0], [0.3, 0, 1, 0]) < 1e-12

    for r in range(9):
        value, residual, commutant = sw.casimir(r)
        assert abs(value - ((r / 2) ** 2 + r / 2)) < 1e-12
        assert residual < 1e-11 and commutant == 1

    p = sw.Momentum(1.2, spatial=[0.3, -0.1, 0.5])
    psi = sw.solve(1.0, p, [1 + 0j, 0.5j, -0.25])
    assert psi.two_j == 2 and psi.spin == 1.0
    assert psi.algebraic_residual(p) < 1e-10
    assert psi.jw_residual(p) < 1e-10
    assert sw.solution_space_dim(2, p) == 3
    family, h, k, packed = psi.sectors()[0]
    assert (family, h, k) == ("plain", 2, 0) and packed[1] == 0.5j

    back = sw.Field.from_json(psi.to_json())
    assert back.packed() == psi.packed()
    assert json.loads(psi.to_json())["j"] == 1.0

    ell, tensor = sw.energy_tensor(psi, p)
    assert abs(ell) < 1e-10 and len(tensor) == 4

    comps, res = sw.solve_antisym(sw.Momentum(1.0), 1 + 0j)
    assert len(comps) == 10 and res < 1e-14

    eps = [[0, 1], [-1, 0]]
    g = [eps[a][b] * eps[ad][bd] + 0j for a in range(2) for ad in range(2) for b in range(2) for bd in range(2)]
    check, dilaton = sw.decompose_spin2(g)
    assert abs(dilaton - 1) < 1e-15 and max(abs(z) for z in check) < 1e-15

    for bad in (lambda: sw.Momentum(1.0, covector=[2, 0, 0, 0]), lambda: sw.decompose_spin2([0j])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
