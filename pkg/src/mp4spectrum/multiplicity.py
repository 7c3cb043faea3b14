"""Adelic characters, the multiplicity formula, and constituent enumeration.

An adelic character is one local character per scenario place (implicitly
trivial elsewhere in the closed world).  Its diagonal pullback evaluates
each global generator a_i as the product over places of eta_v on the
image of a_i under the localization map.  The multiplicity of pi_eta is
1 exactly when the pullback equals the sign character of the parameter.

Two counting routes are kept deliberately independent:

  * enumerate_constituents solves the F2-affine system cut out by the
    pullback condition (basis of each local character subgroup, affine
    solve, kernel enumeration) and then filters out tuples with a
    vanishing local member;
  * brute_force_count iterates the full product of local character lists
    and applies the definitional test tuple by tuple.

Their agreement is the main acceptance gate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from .chargroups import ComponentGroup, F2Character, LocalizationMap, solve_affine, span_iter
from .descriptors import Zero
from .fields import Place
from .localization import LocalParam, localize
from .packets import PacketEntry, local_packet
from .parameters import AParameter, epsilon_tilde


class ScenarioTooLarge(ValueError):
    pass


BRUTE_FORCE_PLACE_CAP = 6


@dataclass(frozen=True)
class AdelicCharacter:
    components: tuple  # ordered (place_id, F2Character) pairs

    def component(self, place_id: str) -> F2Character:
        for pid, ch in self.components:
            if pid == place_id:
                return ch
        raise KeyError(place_id)

    def signs(self) -> tuple:
        return tuple((pid, ch.values) for pid, ch in self.components)

    def sort_key(self) -> tuple:
        # lexicographic over (place id, character bits), +1 before -1
        return tuple((pid, ch.bits) for pid, ch in self.components)


@dataclass(frozen=True)
class Constituent:
    eta: AdelicCharacter
    local_members: tuple  # ordered (place_id, Desc) pairs
    multiplicity: int

    @property
    def has_zero_member(self) -> bool:
        return any(isinstance(d, Zero) for _, d in self.local_members)


@dataclass(frozen=True)
class LocalData:
    place: Place
    param: LocalParam
    group: ComponentGroup
    iota: LocalizationMap
    characters: tuple
    entries: tuple  # PacketEntry per character, aligned

    def entry_for(self, ch: F2Character) -> PacketEntry:
        return self.entries[self.characters.index(ch)]


def prepare_local_data(phi: AParameter, places: list[Place]) -> list[LocalData]:
    out = []
    for place in sorted(places, key=lambda p: p.id):
        lp, group, iota = localize(phi, place)
        chars = tuple(group.characters())
        entries = tuple(local_packet(lp))
        assert tuple(e.label for e in entries) == chars
        out.append(LocalData(place, lp, group, iota, chars, entries))
    return out


def diagonal_pullback(phi: AParameter, places: list[Place], eta: AdelicCharacter) -> F2Character:
    """Delta^* eta on the global component group."""
    from .parameters import component_group

    group = component_group(phi)
    locals_ = prepare_local_data(phi, places)
    values = []
    for i in range(len(group.basis)):
        prod = 1
        for ld in locals_:
            ch = eta.component(ld.place.id)
            prod *= ch.on(ld.iota.image_of_generator(i))
        values.append(prod)
    return F2Character(group, tuple(values))


def multiplicity(phi: AParameter, places: list[Place], eta: AdelicCharacter) -> int:
    return 1 if diagonal_pullback(phi, places, eta) == epsilon_tilde(phi) else 0


def _eta_from_choice(locals_: list[LocalData], choice) -> AdelicCharacter:
    return AdelicCharacter(tuple((ld.place.id, ch) for ld, ch in zip(locals_, choice)))


def _constituent(locals_: list[LocalData], choice) -> Constituent:
    members = tuple((ld.place.id, ld.entry_for(ch).member) for ld, ch in zip(locals_, choice))
    return Constituent(_eta_from_choice(locals_, choice), members, multiplicity=1)


def _solutions_by_linear_algebra(phi: AParameter, locals_: list[LocalData]):
    """All adelic characters with Delta^* eta = eps~, via the affine system.

    Unknowns are the concatenated sign-exponent vectors of the local
    characters; each local character group contributes the F2-subspace of
    vectors orthogonal to its relations, parameterized by a basis.
    """
    eps = epsilon_tilde(phi)
    local_bases = []
    offsets = []
    width = 0
    for ld in locals_:
        n = len(ld.group.basis)
        constraints = list(ld.group.relations)
        sol = solve_affine(constraints, [0] * len(constraints), n) if constraints else ((0,) * n, [])
        if constraints:
            assert sol is not None
            _, kernel = sol
        else:
            kernel = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        local_bases.append(kernel)
        offsets.append(width)
        width += len(kernel)

    # rows: one per global generator; unknowns: coefficients over the local bases
    n_gen = len(eps.group.basis)
    rows = []
    rhs = []
    for i in range(n_gen):
        row = [0] * width
        for ld, basis, off in zip(locals_, local_bases, offsets):
            img = ld.iota.image_of_generator(i)
            for k, bvec in enumerate(basis):
                row[off + k] = sum(a & b for a, b in zip(bvec, img)) % 2
        rows.append(row)
        rhs.append(0 if eps.values[i] == 1 else 1)
    solved = solve_affine(rows, rhs, width)
    if solved is None:
        return
    x0, kernel = solved
    seen = set()
    for delta in span_iter(kernel, width):
        x = tuple(a ^ b for a, b in zip(x0, delta))
        if x in seen:
            continue
        seen.add(x)
        choice = []
        for ld, basis, off in zip(locals_, local_bases, offsets):
            n = len(ld.group.basis)
            bits = [0] * n
            for k, bvec in enumerate(basis):
                if x[off + k]:
                    bits = [(a ^ b) for a, b in zip(bits, bvec)]
            values = tuple(1 if b == 0 else -1 for b in bits)
            choice.append(F2Character(ld.group, values))
        yield tuple(choice)


def enumerate_constituents(
    phi: AParameter, places: list[Place], include_vanishing: bool = False
) -> list[Constituent]:
    """Discrete-spectrum constituents, in deterministic order.

    With include_vanishing=True the multiplicity-one tuples whose member
    vanishes locally are appended (flagged by has_zero_member), mirroring
    the distinction between the character condition and nonvanishing.
    """
    locals_ = prepare_local_data(phi, places)
    picked = []
    for choice in _solutions_by_linear_algebra(phi, locals_):
        cons = _constituent(locals_, choice)
        if cons.has_zero_member and not include_vanishing:
            continue
        picked.append(cons)
    picked.sort(key=lambda c: c.eta.sort_key())
    return picked


def brute_force_count(phi: AParameter, places: list[Place]) -> int:
    """Oracle count: full product iteration with the definitional test."""
    if len(places) > BRUTE_FORCE_PLACE_CAP:
        raise ScenarioTooLarge(f"more than {BRUTE_FORCE_PLACE_CAP} places")
    locals_ = prepare_local_data(phi, places)
    eps = epsilon_tilde(phi)
    n_gen = len(eps.group.basis)
    count = 0
    for choice in itertools.product(*(ld.characters for ld in locals_)):
        ok = True
        for i in range(n_gen):
            prod = 1
            for ld, ch in zip(locals_, choice):
                prod *= ch.on(ld.iota.image_of_generator(i))
            if prod != eps.values[i]:
                ok = False
                break
        if not ok:
            continue
        if any(ld.entry_for(ch).is_zero for ld, ch in zip(locals_, choice)):
            continue
        count += 1
    return count
