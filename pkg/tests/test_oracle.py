import random

import pytest

from fatsep.geometry import Ball, contains_point
from fatsep.instances import Instance, gen_instance
from fatsep.oracle import (
    OracleSizeError,
    brute_pack,
    brute_pierce,
    fine_grid_pierce,
)
from conftest import random_objects


def inst_of(objs, d=2):
    return Instance(dim=d, objects=tuple(objs))


def test_brute_pack_disjoint():
    res = brute_pack(inst_of([Ball((10 * i, 0), 1) for i in range(3)]))
    assert res.value == 3


def test_brute_pack_clique():
    res = brute_pack(inst_of([Ball((0.1 * i, 0), 5) for i in range(5)]))
    assert res.value == 1


def test_brute_pack_path_graph():
    # Three disks in a row, only neighbours touch: endpoints form the optimum.
    res = brute_pack(inst_of([Ball((0, 0), 1.1), Ball((2, 0), 1.1), Ball((4, 0), 1.1)]))
    assert res.value == 2
    assert res.witness == [0, 2]


def test_brute_pack_guard():
    with pytest.raises(OracleSizeError):
        brute_pack(inst_of([Ball((10 * i, 0), 1) for i in range(25)]))


def test_brute_pack_permutation_invariant():
    rng = random.Random(17)
    for seed in range(15):
        inst = inst_of(random_objects(seed, 12))
        base = brute_pack(inst).value
        order = list(range(12))
        rng.shuffle(order)
        assert brute_pack(inst, order=order).value == base


def test_brute_pack_witness_feasible():
    from fatsep.geometry import intersects

    for seed in range(10):
        inst = inst_of(random_objects(seed, 14))
        res = brute_pack(inst)
        wit = [inst.objects[i] for i in res.witness]
        assert len(wit) == res.value
        for i, a in enumerate(wit):
            for b in wit[i + 1 :]:
                assert not intersects(a, b)


def test_brute_pierce_disjoint():
    res = brute_pierce(inst_of([Ball((10 * i, 0), 1) for i in range(4)]))
    assert res.value == 4


def test_brute_pierce_common_point():
    res = brute_pierce(inst_of([Ball((0, 0), float(r)) for r in range(1, 6)]))
    assert res.value == 1


def test_brute_pierce_guard():
    with pytest.raises(OracleSizeError):
        brute_pierce(inst_of([Ball((10 * i, 0), 1) for i in range(15)]))


def test_brute_pierce_witness_feasible():
    for seed in range(10):
        inst = inst_of(random_objects(seed, 9, shape="box"))
        res = brute_pierce(inst)
        assert len(res.witness) == res.value
        for o in inst.objects:
            assert any(contains_point(o, p) for p in res.witness)


@pytest.mark.parametrize("shape", ["ball", "box"])
def test_fine_grid_agrees_with_candidates(shape):
    for seed in range(8):
        inst = gen_instance("random", 2, shape=shape, n=8, seed=seed)
        assert brute_pierce(inst).value == fine_grid_pierce(inst).value


def test_fine_grid_rejects_d3():
    inst = gen_instance("random", 3, shape="box", n=5, seed=0)
    with pytest.raises(ValueError):
        fine_grid_pierce(inst)
