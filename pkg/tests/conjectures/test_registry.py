import pytest

from refutepy.graph import GraphClass
from refutepy.spectral import RangeDefinition
from refutepy.conjectures import Conjecture, list_conjectures, get_conjecture, register_conjecture
from refutepy.conjectures import registry, conjecture_errors as cerrors


def constant_sides(g):
    return 0.0, 1.0


def test_normalize_id():
    for conjecture_id in ['197', 197, 'G197', 'g197', 'Graffiti-197', 'graffiti197', ' graffiti-197 ']:
        assert registry.normalize_id(conjecture_id) == 'graffiti-197',\
            f'normalize_id failed on "{conjecture_id}"'
    assert registry.normalize_id('my-conjecture') == 'my-conjecture'


def test_list_conjectures():
    ids = [conj.id for conj in list_conjectures()]
    assert ids == [f'graffiti-{i}' for i in [29, 30, 137, 139, 197, 289, 301, 322]],\
        'list_conjectures failed. Conjectures should be sorted by their number'


@pytest.mark.parametrize('number,graph_class,min_size,default_target', [
    (29, GraphClass.ANY, 7, 8),
    (30, GraphClass.ANY, 12, 15),
    (137, GraphClass.ANY, 67, 67),
    (139, GraphClass.ANY, 50, 50),
    (197, GraphClass.TRIANGLE_FREE, 17, 17),
    (289, GraphClass.GIRTH_AT_LEAST_5, 20, 20),
    (301, GraphClass.TREE, 14, 14),
    (322, GraphClass.TRIANGLE_FREE, 4, 20),
])
def test_builtin_conjectures(number, graph_class, min_size, default_target):
    conj = get_conjecture(number)
    assert conj.graph_class == graph_class, f'Graffiti {number} should be stated for {graph_class.value} graphs'
    assert conj.min_size == min_size
    assert conj.default_target == default_target
    if number in {197, 322}:
        assert conj.range_definition == RangeDefinition.DIFF
    else:
        assert conj.range_definition is None


def test_get_conjecture_unknown():
    with pytest.raises(cerrors.UnknownConjectureError) as excinfo:
        get_conjecture('graffiti-1')
    assert isinstance(excinfo.value, KeyError)
    assert 'graffiti-197' in str(excinfo.value), 'UnknownConjectureError should list the registered conjectures'


def test_register_conjecture():
    conj = Conjecture(
        id='custom-zero', statement='0 <= 1', graph_class=GraphClass.ANY, min_size=2,
        score_func=constant_sides, default_target=5)
    try:
        register_conjecture(conj)
        assert get_conjecture('custom-zero') is conj, 'register_conjecture failed'
        assert list_conjectures()[-1] is conj, 'list_conjectures failed. Non Graffiti ids should come last'

        with pytest.raises(cerrors.DuplicateConjectureError):
            register_conjecture(conj)
        conj1 = conj.with_overrides(min_size=3)
        register_conjecture(conj1, overwrite=True)
        assert get_conjecture('custom-zero').min_size == 3
    finally:
        registry.unregister_conjecture('custom-zero')

    with pytest.raises(cerrors.UnknownConjectureError):
        get_conjecture('custom-zero')
    with pytest.raises(cerrors.UnknownConjectureError):
        registry.unregister_conjecture('custom-zero')
    with pytest.raises(ValueError):
        registry.unregister_conjecture('197')
    assert len(list_conjectures()) == 8
