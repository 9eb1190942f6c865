import pytest

from fatsep.instances import Instance, gen_instance
from fatsep.render import render_svg
from fatsep.separator import separate
from fatsep.solver import SolveConfig, solve_pack, solve_pierce


def test_empty_instance_frame_only():
    text = render_svg(Instance(dim=2, objects=()))
    assert text.startswith("<svg")
    assert 'class="frame"' in text
    assert 'class="obj' not in text


def test_element_count_matches_instance():
    inst = gen_instance("random", 2, n=12, seed=0)
    text = render_svg(inst)
    assert text.count('class="obj') == 12


def test_rejects_d3():
    inst = gen_instance("random", 3, shape="box", n=3, seed=0)
    with pytest.raises(ValueError):
        render_svg(inst)


def test_separator_overlay_draws_box_and_roles():
    inst = gen_instance("cluster", 2, clusters=2, cluster_size=5, seed=1)
    sep = separate(list(inst.objects))
    text = render_svg(inst, sep)
    assert text.count('class="separator"') == 1
    roles = (
        text.count("obj inside") + text.count("obj outside") + text.count("obj boundary")
    )
    assert roles == inst.n


def test_pack_overlay_fills_witness():
    inst = gen_instance("random", 2, n=10, seed=3)
    sol = solve_pack(inst, SolveConfig())
    text = render_svg(inst, sol)
    filled = text.count('fill="#ef6c00"')
    assert filled == sol.value


def test_pierce_overlay_draws_points(tmp_path):
    inst = gen_instance("random", 2, n=8, seed=4)
    sol = solve_pierce(inst, SolveConfig())
    out = tmp_path / "fig.svg"
    text = render_svg(inst, sol, str(out))
    assert text.count('class="pierce"') == sol.value
    assert out.read_text() == text


def test_boxes_render_as_rects():
    inst = gen_instance("random", 2, shape="box", n=5, seed=5)
    text = render_svg(inst)
    assert text.count("<rect class=\"obj") == 5
