import pytest

from eqlab.fintop import FinSpace
from eqlab.instance import InstanceError, UnresolvedReference, bundled_pack_path, load, loads


def test_the_bundled_pack_loads():
    inst = load(bundled_pack_path())
    assert len(inst.subspatial) >= 20
    assert len(inst.pasm_spans) >= 20
    assert inst.config["zigzag_bound"] == 3
    assert inst.spaces["sier2"].size == 4


def test_spaces_from_opens():
    inst = loads("spaces:\n  v: {points: 2, opens: [[], [1], [0, 1]]}\n")
    assert inst.spaces["v"] == FinSpace.from_sets(2, [[], [1], [0, 1]], "v")


def test_a_non_topology_is_rejected_with_its_name_and_line():
    text = "spaces:\n  ok: {point: true}\n  broken: {points: 2, opens: [[0], [1]]}\n"
    with pytest.raises(InstanceError) as err:
        loads(text, "pack.yaml")
    msg = str(err.value)
    assert "broken" in msg and "pack.yaml:3" in msg


def test_unknown_references_are_reported():
    with pytest.raises(UnresolvedReference) as err:
        loads("equilogical:\n  e: {space: nowhere, relation: total}\n")
    assert "nowhere" in str(err.value)


def test_lookup_order_and_qualified_names():
    inst = load(bundled_pack_path())
    assert inst.lookup("interval")[0] == "bases"
    assert inst.lookup("groupoids:interval")[0] == "groupoids"
    with pytest.raises(UnresolvedReference):
        inst.lookup("nothing-here")


def test_config_overrides_and_validation():
    inst = load(bundled_pack_path(), {"zigzag_bound": 2, "cap": None})
    assert inst.config["zigzag_bound"] == 2 and inst.config["cap"] == 100000
    with pytest.raises(InstanceError):
        loads("config: {budget: -1}\n")
    with pytest.raises(InstanceError):
        loads("config: {colour: 3}\n")
    with pytest.raises(InstanceError):
        loads("shapes: {}\n")


def test_yaml_syntax_errors_carry_a_location():
    with pytest.raises(InstanceError) as err:
        loads("spaces: [\n", "bad.yaml")
    assert str(err.value).startswith("bad.yaml:")


def test_missing_files_are_instance_errors(tmp_path):
    with pytest.raises(InstanceError):
        load(tmp_path / "absent.yaml")
