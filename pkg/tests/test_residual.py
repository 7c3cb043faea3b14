"""Residual spectrum enumeration and its cross-checks."""

import pytest

from mp4spectrum.descriptors import render
from mp4spectrum.fields import GlobalElement, minus_one_element, trivial_element
from mp4spectrum.localization import localize
from mp4spectrum.multiplicity import enumerate_constituents
from mp4spectrum.packets import local_packet
from mp4spectrum.parameters import (
    AParameter,
    CuspidalDatum,
    InvalidParameter,
    ParamType,
    RhoIrreducibleSymplectic,
    RhoRealDiscrete,
    classify,
)
from mp4spectrum.residual import Mp2CuspidalWeil, residual_spectrum

from conftest import make_places


def _base():
    places = make_places(["nonarch-odd-1mod4", "nonarch-odd-3mod4", "real", "real"])
    one = trivial_element(places)
    m1 = minus_one_element(places)
    t = GlobalElement(
        "t",
        {
            "v1": places[0].class_from_label("u"),
            "v2": places[1].class_from_label("1"),
            "v3": places[2].class_from_label("-1"),
            "v4": places[3].class_from_label("-1"),
        },
    )
    return places, [one, m1, t]


def test_borel_families_enumerated():
    places, elements = _base()
    cons = residual_spectrum(places, elements, [], [])
    names = {c.name for c in cons}
    # one principal constituent per character, one HPS one per unordered pair
    assert {f"B-pr[{e.name}]" for e in elements} <= names
    assert "B-HPS[-1,t]" in names and "B-HPS[1,t]" in names
    assert len([c for c in cons if c.support == "B"]) == 3 + 3


def test_tags_classify_correctly():
    places, elements = _base()
    w = Mp2CuspidalWeil("piw", "t", frozenset({"v1", "v3"}))
    cons = residual_spectrum(places, elements, [], [w])
    for c in cons:
        assert classify(c.parameter).value == c.family


def test_weil_rep_validation():
    places, elements = _base()
    pids = {p.id for p in places}
    names = {e.name for e in elements}
    with pytest.raises(InvalidParameter):
        Mp2CuspidalWeil("w", "t", frozenset()).validate(pids, names)
    with pytest.raises(InvalidParameter):
        Mp2CuspidalWeil("w", "t", frozenset({"v1"})).validate(pids, names)
    with pytest.raises(InvalidParameter):
        Mp2CuspidalWeil("w", "nope", frozenset({"v1", "v2"})).validate(pids, names)
    with pytest.raises(InvalidParameter):
        Mp2CuspidalWeil("w", "t", frozenset({"v1", "zzz"})).validate(pids, names)


def test_hps_excluded_when_classes_collide_on_s():
    places, elements = _base()
    # t and -1 agree at v3; a Weil rep of type t with v3 in S(pi) blocks the pair (-1, t)
    w = Mp2CuspidalWeil("piw", "t", frozenset({"v1", "v3"}))
    names = {c.name for c in residual_spectrum(places, elements, [], [w])}
    assert "P1-HPS[1,t;piw]" in names
    assert "P1-HPS[-1,t;piw]" not in names
    # with S(pi) away from the collision the pair is allowed
    w2 = Mp2CuspidalWeil("piw2", "t", frozenset({"v1", "v2"}))
    names2 = {c.name for c in residual_spectrum(places, elements, [], [w2])}
    assert "P1-HPS[-1,t;piw2]" in names2


def _sk_datum(places, l_half):
    return CuspidalDatum(
        "rho",
        2,
        "symplectic",
        1,
        {
            "v1": RhoIrreducibleSymplectic("sc1", -1, {"u": -1, "p": 1, "up": -1}),
            "v2": RhoIrreducibleSymplectic("sc2", -1, {"u": 1, "p": 1, "up": 1}),
            "v3": RhoRealDiscrete(2),
            "v4": RhoRealDiscrete(2),
        },
        twisted_roots={"t": 1, "1": 1},
        l_half_nonzero=l_half,
    )


def test_sk_family_requires_central_l_value():
    places, elements = _base()
    rho = _sk_datum(places, {"t": True})
    cons = residual_spectrum(places, elements, [rho], [])
    sk = [c for c in cons if c.family == "saito-kurokawa"]
    assert sk and all("[t;rho" in c.name for c in sk)
    # rank-1 members: sign patterns over the irreducible places multiply to the root number
    assert len(sk) == 8  # 2^4 patterns / parity constraint
    rho0 = _sk_datum(places, {"t": False})
    cons0 = residual_spectrum(places, elements, [rho0], [])
    assert not [c for c in cons0 if c.family == "saito-kurokawa"]


def test_p2_family_needs_dihedral_data():
    places, elements = _base()
    cons = residual_spectrum(places, elements, [_sk_datum(places, {})], [])
    assert not [c for c in cons if c.support == "P2"]


def _eta_lookup(phi, places):
    table = {}
    for p in places:
        lp, group, _ = localize(phi, p)
        for e in local_packet(lp):
            table[(p.id, repr(e.member))] = e.label.values
    return table


@pytest.mark.parametrize("family", ["principal", "howe-piatetski-shapiro"])
def test_residual_members_appear_in_enumeration(family):
    # every principal / HPS residual constituent matches an eta from the
    # discrete-spectrum enumeration, descriptor by descriptor
    places, elements = _base()
    w = Mp2CuspidalWeil("piw", "t", frozenset({"v1", "v3"}))
    cons = [
        c
        for c in residual_spectrum(places, elements, [], [w])
        if c.family == family
    ]
    assert cons
    for c in cons:
        lookup = _eta_lookup(c.parameter, places)
        eta_signs = tuple(
            (pid, lookup[(pid, repr(member))]) for pid, member in c.descriptor
        )
        spectrum = {
            tuple(cc.eta.signs()): {pid: repr(m) for pid, m in cc.local_members}
            for cc in enumerate_constituents(c.parameter, places)
        }
        assert eta_signs in spectrum
        assert spectrum[eta_signs] == {pid: repr(m) for pid, m in c.descriptor}
