"""End-to-end smoke test of the python bindings."""

import orichain

SPHERE = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
SOLID = [[0, 1, 2, 3]]
SPHERE_CYCLE = [([1, 2, 3], 1), ([0, 3, 2], 1), ([0, 1, 3], 1), ([0, 2, 1], 1)]
CIRCLE_CYCLE = [([0, 1], 1), ([1, 2], 1), ([2, 0], 1)]


def matmul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def test_version():
    assert orichain.__version__ == "0.1.0"


def test_boundary_and_projection():
    terms = orichain.boundary([([0, 1, 2], 1)])
    assert terms == [([0, 1], 1), ([0, 2], -1), ([1, 2], 1)]
    assert orichain.project_to_oriented([([1, 0], 1)]) == [([0, 1], -1)]
    assert orichain.is_cycle(CIRCLE_CYCLE)
    assert not orichain.is_cycle([([0, 1], 1)])


def test_smith_normal_form():
    a = [[2, 4], [6, 8]]
    result = orichain.smith_normal_form(a, with_transforms=True)
    assert result["divisors"] == [2, 4]
    uav = matmul(matmul(result["U"], a), result["V"])
    assert uav == result["S"]


def test_homology():
    for model in ("oriented", "ordered"):
        groups = orichain.homology(SPHERE, model=model)
        assert [g["free_rank"] for g in groups] == [1, 0, 1]
        assert [g["torsion"] for g in groups] == [[], [], []]
        assert [g["group"] for g in groups] == ["Z", "0", "Z"]

    relative = orichain.relative_homology(SOLID, SPHERE, "oriented")
    assert [g["free_rank"] for g in relative] == [0, 0, 0, 1]
    assert orichain.euler_characteristic(SPHERE) == 2


def test_mv():
    hexagon = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]
    arcs = [[[0, 1], [1, 2], [2, 3]], [[3, 4], [4, 5], [0, 5]]]
    report = orichain.verify_mv(hexagon, arcs)
    assert report["ok"]


def test_gluing():
    summary = orichain.glue_summary(SPHERE_CYCLE)
    assert summary["cell_count"] == 4
    assert summary["class_counts"] == [4, 6, 4]
    assert summary["euler_characteristic"] == 2
    assert summary["closed"]
    assert summary["orientation_compatible"]
    assert summary["pseudomanifold"]
    assert orichain.check_identity(SPHERE_CYCLE)
    assert orichain.check_identity(CIRCLE_CYCLE)


def test_cobordism():
    filling = [
        ([0, 3, 4], 1),
        ([1, 0, 4], 1),
        ([1, 4, 5], 1),
        ([2, 1, 5], 1),
        ([2, 5, 3], 1),
        ([0, 2, 3], 1),
    ]
    end1 = [([3, 4], 1), ([4, 5], 1), ([5, 3], 1)]
    summary = orichain.cobordism_summary(filling, CIRCLE_CYCLE, end1)
    assert summary["end_dimension"] == 1
    assert summary["filling_cells"] == 6
    assert summary["end0_attachments"] == 3
    assert summary["end1_attachments"] == 3
    assert summary["interior_pairs"] == 6
    assert summary["sign_conditions_hold"]
    assert summary["boundary_matches"]
    assert summary["closed_boundary"]
    assert summary["euler_characteristic"] == 0


def test_smoothing():
    assert orichain.bump_value(0, 1, [0.01, 0.01, 0.49, 0.49]) == 1.0
    assert orichain.bump_value(0, 1, [0.3, 0.3, 0.1, 0.3]) == 0.0

    center = [0.25, 0.25, 0.25, 0.25]
    assert orichain.codim2_collapse(center) == center

    x = [0.05, 0.55, 0.4]
    routes = [orichain.face_collapse(x, p) for p in range(3)]
    assert routes[0] == routes[1] == routes[2]


def test_homotopy_identity():
    assert orichain.homotopy_identity(2, [[0, 1, 2]], [[1, 0, 2]], [1])
    assert orichain.homotopy_identity(1, [[0, 1]], [[1, 0]], [3])


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
