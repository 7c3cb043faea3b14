"""Local packet tables for Mp(4), with the appendix calculi behind them.

This module is the table engine: given a local shape it lists the packet
entries (character label, symbolic member, L-packet flag), applying the
nonvanishing rules at the exceptional shapes.  It also houses the
quaternionic sign bookkeeping (eps, eps'), the local Shimura
correspondence table between Mp(W_2) and SO(V_2^+-), the reducibility
oracle for parabolically induced representations, the elementary Weil
quotient forms, and the rank-1/rank-2 theta nonvanishing criteria.

All tables are compiled in; lookups are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .chargroups import ComponentGroup, F2Character
from .descriptors import (
    MP4,
    Desc,
    GL2Seg,
    Mp2Member,
    MpDS4,
    MpGenNG,
    MpRealDS2,
    MpSt2,
    MpStPair,
    MpStTau,
    MpStTwist,
    NuChar,
    OExt,
    Opaque,
    QuadChar,
    RealD,
    RealLKT,
    SC2,
    SODS,
    Seg,
    SOGenNG,
    SOStPair,
    SOStTau,
    SOStTwist,
    St2,
    TagChar,
    ThetaLift,
    TwistNu,
    WeilEven,
    WeilOdd,
    ZERO,
    Zero,
    dsum,
    elementary_weil,
    lq,
    render,
    seg,
)
from .fields import Place, Sign, SquareClass, chi_minus_one
from .ktypes import lowest_kprime_discrete
from .localization import (
    LocalParam,
    Piece4SC,
    PieceD,
    PiecePS,
    PieceSC,
    PieceSt,
    ShHPS,
    ShPrincipal,
    ShSK,
    ShSoudryIrreducible,
    ShSoudryNonQuadratic,
    ShTempered,
)
from .parameters import (
    RhoDihedralSupercuspidal,
    RhoIrreducibleSymplectic,
    RhoPrincipalSeries,
    RhoRealDiscrete,
    RhoRealOrthogonalDiscrete,
    RhoSteinberg,
)

HALF = Fraction(1, 2)
THREE_HALF = Fraction(3, 2)


class UnsupportedShape(ValueError):
    pass


class UnsupportedInduction(ValueError):
    pass


class RowNotFound(KeyError):
    pass


@dataclass(frozen=True)
class PacketEntry:
    label: F2Character
    member: Desc
    in_l_packet: bool

    @property
    def is_zero(self) -> bool:
        return isinstance(self.member, Zero)


# ---------------------------------------------------------------------------
# sign bookkeeping for the rank-1 theta construction


def sk_quaternion_data(
    eps1: Sign,
    eps2: Sign,
    eps_rho: Sign,
    eps_rho_twist: Sign,
    chi_a_minus_one: Sign,
    rho_reducible: bool = False,
) -> tuple[Sign, Sign]:
    """(eps, eps') attached to a Saito-Kurokawa label (eps1, eps2).

    eps  = eps1 . eps(1/2,rho) . eps(1/2,rho x chi_a) . chi_a(-1)
    eps' = eps1 . eps2 . eps(1/2,rho) . chi_a(-1)

    For reducible rho the three sign factors in eps cancel and eps = eps1.
    """
    if rho_reducible:
        eps = eps1
    else:
        eps = eps1 * eps_rho * eps_rho_twist * chi_a_minus_one
    eps_prime = eps1 * eps2 * eps_rho * chi_a_minus_one
    return eps, eps_prime


def hps_quaternion_data(eps1: Sign, eps2: Sign, chi_ab_minus_one: Sign) -> tuple[Sign, Sign]:
    """(eps, eps') attached to a Howe-PS label: eps = eps2, eps' = eps1 eps2 chi_ab(-1)."""
    return eps2, eps1 * eps2 * chi_ab_minus_one


def theta_o3_nonvanishing(
    target_rank: int,
    *,
    sigma_is_det: bool,
    sigma_minus_one: Sign = 1,
    space_eps: Sign = 1,
    root_number: Sign = 1,
) -> bool:
    """Nonvanishing of the theta lift of an O(V_1^eps) representation.

    Rank 2 is the conservation-relation criterion (everything but det
    survives); rank 1 is the dichotomy sigma(-1) = eps . eps(1/2, sigma).
    """
    if target_rank == 2:
        return not sigma_is_det
    if target_rank == 1:
        return sigma_minus_one == space_eps * root_number
    raise ValueError("target rank must be 1 or 2")


# ---------------------------------------------------------------------------
# helper constructors


def _sorted_pair(x: str, y: str) -> tuple[str, str]:
    return (x, y) if x <= y else (y, x)


def mp_st_pair(label: str, inner: Desc) -> Desc:
    """St~_psi(chi, pi), normalized via St~(chi, st~_mu) = St~(mu, st~_chi)."""
    if isinstance(inner, MpSt2):
        lo, hi = _sorted_pair(label, inner.label)
        return MpStPair(lo, MpSt2(hi))
    return MpStPair(label, inner)


def so_st_pair(space_eps: Sign, label: str, inner: Desc) -> Desc:
    """St^eps(chi, sigma), normalized via St^+(chi, st_mu) = St^+(mu, st_chi)."""
    if space_eps == 1 and isinstance(inner, St2):
        lo, hi = _sorted_pair(label, inner.label)
        return SOStPair(1, lo, St2(hi))
    return SOStPair(space_eps, label, inner)


def _tau_of_piece(piece) -> Desc:
    if isinstance(piece, PieceSt):
        return St2(piece.label)
    if isinstance(piece, PieceSC):
        return SC2(piece.tag)
    raise UnsupportedShape(f"no GL(2) datum behind {piece!r}")


def mp_ds4(piece_sign_pairs) -> Desc:
    """Tempered Mp(4) member named by (constituent, sign) pairs, canonically sorted.

    A doubled constituent with its (necessarily diagonal) label is the
    generic or nongeneric summand of the corresponding I_{P2,psi}(tau).
    """
    ordered = sorted(piece_sign_pairs, key=lambda ps: (repr(ps[0]), ps[1]))
    if len(ordered) == 2 and ordered[0][0] == ordered[1][0]:
        if ordered[0][1] != ordered[1][1]:
            raise UnsupportedShape("mixed label on a doubled constituent indexes no member")
        return MpGenNG(_tau_of_piece(ordered[0][0]), ordered[0][1] == 1)
    return MpDS4(lparam=tuple(p for p, _ in ordered), label=tuple(s for _, s in ordered))


def so_ds(piece_sign_pairs) -> Desc:
    ordered = sorted(piece_sign_pairs, key=lambda ps: (repr(ps[0]), ps[1]))
    if len(ordered) == 2 and ordered[0][0] == ordered[1][0]:
        if ordered[0][1] != ordered[1][1]:
            raise UnsupportedShape("mixed label on a doubled constituent indexes no member")
        return SOGenNG(_tau_of_piece(ordered[0][0]), ordered[0][1] == 1)
    return SODS(lparam=tuple(p for p, _ in ordered), label=tuple(s for _, s in ordered))


def _real_ds_member(a: Fraction, b: Fraction, eps1: Sign, eps2: Sign) -> Desc:
    return RealLKT(lowest_kprime_discrete(a, b, eps1, eps2))


def _wald_member(rho, rho_name: str, eps1: Sign) -> Desc:
    """Member of the rank-1 metaplectic packet of an irreducible symplectic rho_v."""
    if isinstance(rho, RhoIrreducibleSymplectic):
        return Mp2Member(rho.tag, eps1)
    if isinstance(rho, RhoSteinberg):
        return MpSt2(rho.label) if eps1 == 1 else WeilOdd(rho.label)
    if isinstance(rho, RhoRealDiscrete):
        lam = Fraction(2 * rho.kappa - 1, 2)
        return MpRealDS2(lam if eps1 == 1 else -lam)
    raise UnsupportedShape(f"no rank-1 packet for {rho!r}")


# ---------------------------------------------------------------------------
# component groups attached to shapes (mirrors localization, kept local so the
# packet engine is usable on bare shapes)


def group_of_shape(lp: LocalParam) -> ComponentGroup:
    shape = lp.shape
    if isinstance(shape, ShPrincipal):
        return ComponentGroup(("a1",))
    if isinstance(shape, ShSK):
        if isinstance(shape.rho, RhoPrincipalSeries):
            return ComponentGroup(("a1", "a2"), ((1, 0),))
        return ComponentGroup(("a1", "a2"))
    if isinstance(shape, ShHPS):
        if shape.a == shape.b:
            return ComponentGroup(("a1", "a2"), ((1, 1),))
        return ComponentGroup(("a1", "a2"))
    if isinstance(shape, ShSoudryIrreducible):
        return ComponentGroup(("a1",))
    if isinstance(shape, ShSoudryNonQuadratic):
        return ComponentGroup(())
    if isinstance(shape, ShTempered):
        gens = [p for p in shape.pieces if not isinstance(p, PiecePS)]
        labels = tuple(f"g{k}" for k in range(len(gens)))
        relations = []
        for j in range(len(gens)):
            for k in range(j + 1, len(gens)):
                if gens[j] == gens[k]:
                    rel = [0] * len(gens)
                    rel[j] = rel[k] = 1
                    relations.append(tuple(rel))
        return ComponentGroup(labels, tuple(relations))
    raise UnsupportedShape(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# the packet tables


def _principal_entries(place: Place, a: SquareClass, chars) -> list[PacketEntry]:
    out = []
    for ch in chars:
        (eps,) = ch.values
        member = elementary_weil(2, eps, a.label)
        out.append(PacketEntry(ch, member, in_l_packet=(eps == 1)))
    return out


def _sk_entries(place: Place, shape: ShSK, chars) -> list[PacketEntry]:
    a = shape.a
    rho = shape.rho
    out = []
    if isinstance(rho, RhoPrincipalSeries):
        for ch in chars:
            eps1, eps2 = ch.values
            assert eps1 == 1
            if eps2 == 1:
                member = lq(MP4, [seg(a.label, HALF), Seg(TagChar(rho.chi), rho.s)])
            else:
                member = lq(MP4, [Seg(TagChar(rho.chi), rho.s)], WeilOdd(a.label))
            out.append(PacketEntry(ch, member, in_l_packet=(eps2 == 1)))
        return out
    for ch in chars:
        eps1, eps2 = ch.values
        if eps2 == 1:
            member = lq(MP4, [seg(a.label, HALF)], _wald_member(rho, shape.rho_name, eps1))
            out.append(PacketEntry(ch, member, in_l_packet=True))
            continue
        if isinstance(rho, RhoRealDiscrete):
            ca = chi_minus_one(place, a)
            if rho.kappa > 1 or eps1 == ca:
                member = _real_ds_member(Fraction(2 * rho.kappa - 1, 2), HALF, eps1, ca)
            else:
                member = ZERO
        elif isinstance(rho, RhoSteinberg) and place.class_from_label(rho.label) == a:
            if not a.is_trivial:
                member = ZERO if eps1 == 1 else mp_ds4([(PieceSt(a.label), -1), (PieceSt(a.label), -1)])
            else:
                member = mp_ds4([(PieceSt(a.label), 1), (PieceSt(a.label), 1)]) if eps1 == 1 else ZERO
        else:
            piece = PieceSC(rho.tag) if isinstance(rho, RhoIrreducibleSymplectic) else PieceSt(rho.label)
            member = mp_ds4([(piece, eps1), (PieceSt(a.label), -1)])
        out.append(PacketEntry(ch, member, in_l_packet=False))
    return out


def _hps_entries(place: Place, shape: ShHPS, chars) -> list[PacketEntry]:
    a, b = shape.a, shape.b
    out = []
    if a == b:
        for ch in chars:
            eps1, eps2 = ch.values
            if eps1 == 1:
                member = lq(MP4, [seg(a.label, HALF), seg(a.label, HALF)])
            elif place.is_complex:
                member = ZERO
            elif place.is_real:
                minus_a = a * place.minus_one()
                member = lq(MP4, [seg(a.label, HALF)], WeilOdd(minus_a.label))
            else:
                member = lq(MP4, [seg(a.label, HALF)], MpSt2(a.label))
            out.append(PacketEntry(ch, member, in_l_packet=(eps1 == 1)))
        return out
    for ch in chars:
        eps1, eps2 = ch.values
        if (eps1, eps2) == (1, 1):
            member = lq(MP4, [seg(a.label, HALF), seg(b.label, HALF)])
        elif (eps1, eps2) == (1, -1):
            member = lq(MP4, [seg(a.label, HALF)], WeilOdd(b.label))
        elif (eps1, eps2) == (-1, 1):
            member = lq(MP4, [seg(b.label, HALF)], WeilOdd(a.label))
        else:
            if place.is_real:
                member = ZERO
            else:
                member = mp_ds4([(PieceSt(a.label), -1), (PieceSt(b.label), -1)])
        out.append(PacketEntry(ch, member, in_l_packet=((eps1, eps2) == (1, 1))))
    return out


def _soudry_entries(place: Place, shape, chars) -> list[PacketEntry]:
    if isinstance(shape, ShSoudryNonQuadratic):
        member = lq(MP4, [Seg(TagChar(shape.chi), HALF), Seg(TagChar(shape.chi, True), HALF)])
        return [PacketEntry(chars[0], member, in_l_packet=True)]
    rho = shape.rho
    out = []
    for ch in chars:
        (eps,) = ch.values
        if isinstance(rho, RhoDihedralSupercuspidal):
            if eps == 1:
                member = lq(MP4, [GL2Seg(SC2(rho.tag), HALF)])
            else:
                member = mp_ds4([(("orthS2", rho.tag), -1)])
        else:
            assert isinstance(rho, RhoRealOrthogonalDiscrete)
            kappa = Fraction(rho.kappa)
            if eps == 1:
                member = lq(MP4, [GL2Seg(RealD(kappa), HALF)])
            else:
                member = dsum(
                    _real_ds_member(kappa + HALF, kappa - HALF, 1, -1),
                    _real_ds_member(kappa + HALF, kappa - HALF, -1, 1),
                )
        out.append(PacketEntry(ch, member, in_l_packet=(eps == 1)))
    return out


def _tempered_entries(place: Place, shape: ShTempered, chars) -> list[PacketEntry]:
    gens = [p for p in shape.pieces if not isinstance(p, PiecePS)]
    all_gen = len(gens) == len(shape.pieces)
    if place.is_real and all_gen and len(gens) == 2 and all(isinstance(p, PieceD) for p in gens):
        a, b = gens[0].a, gens[1].a  # sorted descending by the localization order
        out = []
        for ch in chars:
            eps1, eps2 = ch.values
            out.append(PacketEntry(ch, _real_ds_member(a, b, eps1, eps2), in_l_packet=True))
        return out
    if place.is_nonarch and all_gen and len(gens) == 1 and isinstance(gens[0], Piece4SC):
        return [PacketEntry(ch, mp_ds4([(gens[0], ch.values[0])]), in_l_packet=True) for ch in chars]
    if place.is_nonarch and all_gen and len(gens) == 2 and all(
        isinstance(p, (PieceSC, PieceSt)) for p in gens
    ):
        out = []
        for ch in chars:
            member = mp_ds4(list(zip(gens, ch.values)))
            out.append(PacketEntry(ch, member, in_l_packet=True))
        return out
    key = tuple(repr(p) for p in shape.pieces)
    return [PacketEntry(ch, Opaque("tempered-member", (key, ch.values)), in_l_packet=True) for ch in chars]


def local_packet(lp: LocalParam) -> list[PacketEntry]:
    """The packet entries at a local parameter, one per admissible character."""
    group = group_of_shape(lp)
    chars = group.characters()
    shape = lp.shape
    if isinstance(shape, ShPrincipal):
        return _principal_entries(lp.place, shape.a, chars)
    if isinstance(shape, ShSK):
        return _sk_entries(lp.place, shape, chars)
    if isinstance(shape, ShHPS):
        return _hps_entries(lp.place, shape, chars)
    if isinstance(shape, (ShSoudryIrreducible, ShSoudryNonQuadratic)):
        return _soudry_entries(lp.place, shape, chars)
    if isinstance(shape, ShTempered):
        return _tempered_entries(lp.place, shape, chars)
    raise UnsupportedShape(f"unknown shape {shape!r}")


def designated_l_packet_member(lp: LocalParam) -> Desc:
    """The member the tables attach to the L-parameter of a nontempered shape.

    Built directly from the Langlands data of the associated L-parameter,
    independently of the packet listing, so descriptor equality against the
    all-plus packet entry is a meaningful table invariant.
    """
    shape = lp.shape
    if isinstance(shape, ShPrincipal):
        lab = shape.a.label
        return lq(MP4, [seg(lab, THREE_HALF), seg(lab, HALF)])
    if isinstance(shape, ShSK):
        if isinstance(shape.rho, RhoPrincipalSeries):
            return lq(MP4, [seg(shape.a.label, HALF), Seg(TagChar(shape.rho.chi), shape.rho.s)])
        return lq(MP4, [seg(shape.a.label, HALF)], _wald_member(shape.rho, shape.rho_name, 1))
    if isinstance(shape, ShHPS):
        return lq(MP4, [seg(shape.a.label, HALF), seg(shape.b.label, HALF)])
    if isinstance(shape, ShSoudryIrreducible):
        rho = shape.rho
        if isinstance(rho, RhoDihedralSupercuspidal):
            return lq(MP4, [GL2Seg(SC2(rho.tag), HALF)])
        return lq(MP4, [GL2Seg(RealD(Fraction(rho.kappa)), HALF)])
    if isinstance(shape, ShSoudryNonQuadratic):
        return lq(MP4, [Seg(TagChar(shape.chi), HALF), Seg(TagChar(shape.chi, True), HALF)])
    raise UnsupportedShape("tempered shapes have no single designated member")


# ---------------------------------------------------------------------------
# the local Shimura correspondence table (nonarchimedean, all summands symplectic)


@dataclass(frozen=True)
class SCEntry:
    label: tuple
    mp: Desc
    so_space: Sign
    so: Desc


@dataclass(frozen=True)
class SCRow:
    name: str
    entries: tuple[SCEntry, ...]

    def mp_member(self, label: tuple) -> Desc:
        for e in self.entries:
            if e.label == label:
                return e.mp
        raise RowNotFound(f"label {label} not in row {self.name}")

    def to_so(self, label: tuple) -> tuple[Sign, Desc]:
        for e in self.entries:
            if e.label == label:
                return e.so_space, e.so
        raise RowNotFound(f"label {label} not in row {self.name}")

    def to_mp(self, so_desc: Desc) -> tuple[tuple, Desc]:
        for e in self.entries:
            if e.so == so_desc:
                return e.label, e.mp
        raise RowNotFound(f"descriptor {render(so_desc)} not in row {self.name}")


def _sc_row(name: str, quads) -> SCRow:
    entries = sorted(
        (SCEntry(label, mp, _prod(label), so) for label, mp, so in quads),
        key=lambda e: tuple(0 if s == 1 else 1 for s in e.label),
    )
    return SCRow(name, tuple(entries))


def _prod(label: tuple) -> Sign:
    out = 1
    for s in label:
        out *= s
    return out


def shimura_correspondence(row: SCRow, direction: str, key):
    """Cross the correspondence one member at a time.

    direction "mp->so" takes a character label and returns (space, SO member);
    direction "so->mp" takes an SO-side descriptor and returns (label, Mp member).
    """
    if direction == "mp->so":
        return row.to_so(key)
    if direction == "so->mp":
        return row.to_mp(key)
    raise ValueError("direction must be 'mp->so' or 'so->mp'")


def shimura_row(place: Place, shape: ShTempered) -> SCRow:
    """The correspondence row matching a tempered local shape.

    Raises RowNotFound when the shape is outside the tabulated rows
    (principal-series constituents, archimedean places, or missing sign data).
    """
    if not place.is_nonarch:
        raise RowNotFound("rows are tabulated at nonarchimedean places only")
    return shimura_row_for_pieces(place, shape)


def shimura_row_for_pieces(place: Place, shape: ShTempered) -> SCRow:
    pieces = [p for p in shape.pieces]
    if any(isinstance(p, PiecePS) for p in pieces):
        raise RowNotFound("principal-series constituents are outside the table")
    sc_signs = {tag: (eps, dict(tw)) for tag, eps, tw in shape.sc_signs}

    def chim1(label: str) -> Sign:
        return chi_minus_one(place, place.class_from_label(label))

    if len(pieces) == 1 and isinstance(pieces[0], Piece4SC):
        tag = pieces[0].tag
        return _sc_row(
            "4dim-irreducible",
            [
                ((e,), mp_ds4([(Piece4SC(tag), e)]), so_ds([(Piece4SC(tag), e)]))
                for e in (1, -1)
            ],
        )

    if len(pieces) == 2 and all(isinstance(p, PieceSC) for p in pieces):
        t1, t2 = pieces[0].tag, pieces[1].tag
        if t1 == t2:
            tau = SC2(t1)
            return _sc_row(
                "double-supercuspidal",
                [
                    ((1, 1), MpGenNG(tau, True), SOGenNG(tau, True)),
                    ((-1, -1), MpGenNG(tau, False), SOGenNG(tau, False)),
                ],
            )
        quads = []
        for e1 in (1, -1):
            for e2 in (1, -1):
                pair = [(PieceSC(t1), e1), (PieceSC(t2), e2)]
                quads.append(((e1, e2), mp_ds4(pair), so_ds(pair)))
        return _sc_row("pair-supercuspidal", quads)

    if len(pieces) == 2 and {type(pieces[0]), type(pieces[1])} == {PieceSC, PieceSt}:
        sc = next(p for p in pieces if isinstance(p, PieceSC))
        st = next(p for p in pieces if isinstance(p, PieceSt))
        tag, a = sc.tag, st.label
        if tag not in sc_signs:
            raise RowNotFound(f"no sign data for supercuspidal tag {tag!r}")
        eps0, twists = sc_signs[tag]
        sigma0 = lambda e: Opaque("sigma0", (tag, e))
        pi0 = lambda e: Mp2Member(tag, e)
        # label order in the table: (sign on the supercuspidal, sign on chi_a x S_2);
        # align with the basis order of the shape
        first_is_sc = isinstance(pieces[0], PieceSC)

        def lab(es: Sign, ea: Sign) -> tuple:
            return (es, ea) if first_is_sc else (ea, es)

        if a == "1":
            rows = [
                (lab(1, 1), ThetaLift(True, 2, 1, 1, "1", OExt(sigma0(1), -eps0)),
                 so_st_pair(1, "1", sigma0(1))),
                (lab(1, -1), mp_st_pair("1", pi0(1)),
                 ThetaLift(False, 1, 2, -1, "1", pi0(1))),
                (lab(-1, 1), ThetaLift(True, 2, 1, -1, "1", OExt(sigma0(-1), eps0)),
                 so_st_pair(-1, "1", sigma0(-1))),
                (lab(-1, -1), mp_st_pair("1", pi0(-1)),
                 ThetaLift(False, 1, 2, 1, "1", pi0(-1))),
            ]
            return _sc_row("supercuspidal-plus-trivial-S2", rows)
        if a not in twists:
            raise RowNotFound(f"twisted root number by class {a!r} missing for tag {tag!r}")
        eps_a = eps0 * twists[a] * chim1(a)
        rows = [
            (lab(1, 1), mp_st_pair(a, pi0(1)), so_st_pair(1, a, sigma0(1))),
            (lab(1, -1),
             ThetaLift(True, 2, 1, eps_a, a, OExt(TwistNu(sigma0(eps_a), a), -eps0 * chim1(a))),
             TwistNu(ThetaLift(False, 1, 2, -1, a, pi0(eps_a)), a)),
            (lab(-1, 1), mp_st_pair(a, pi0(-1)), so_st_pair(-1, a, sigma0(-1))),
            (lab(-1, -1),
             ThetaLift(True, 2, 1, -eps_a, a, OExt(TwistNu(sigma0(-eps_a), a), eps0 * chim1(a))),
             TwistNu(ThetaLift(False, 1, 2, 1, a, pi0(-eps_a)), a)),
        ]
        return _sc_row("supercuspidal-plus-quadratic-S2", rows)

    if len(pieces) == 2 and all(isinstance(p, PieceSt) for p in pieces):
        a, b = pieces[0].label, pieces[1].label
        if a == b:
            tau = St2(a)
            return _sc_row(
                "double-steinberg",
                [
                    ((1, 1), MpGenNG(tau, True), SOGenNG(tau, True)),
                    ((-1, -1), MpGenNG(tau, False), SOGenNG(tau, False)),
                ],
            )
        if "1" in (a, b):
            c = a if b == "1" else b  # the nontrivial class
            one_first = a == "1"

            def lab(ec: Sign, e1: Sign) -> tuple:
                # (sign on chi_c x S_2, sign on 1 x S_2) -> basis order
                return (e1, ec) if one_first else (ec, e1)

            rows = [
                (lab(1, 1), mp_st_pair(c, WeilOdd("1")), so_st_pair(1, c, St2("1"))),
                (lab(1, -1), mp_st_pair(c, MpSt2("1")), so_st_pair(-1, c, NuChar("1"))),
                (lab(-1, 1), ThetaLift(True, 2, 1, -1, "1", OExt(NuChar(c), chim1(c))),
                 so_st_pair(-1, "1", NuChar(c))),
                (lab(-1, -1), mp_st_pair("1", WeilOdd(c)),
                 ThetaLift(False, 1, 2, 1, "1", WeilOdd(c))),
            ]
            return _sc_row("steinberg-plus-trivial", rows)
        ab = (place.class_from_label(a) * place.class_from_label(b)).label
        rows = [
            ((1, 1), mp_st_pair(a, MpSt2(b)), so_st_pair(1, a, St2(b))),
            ((1, -1), mp_st_pair(a, WeilOdd(b)), so_st_pair(-1, a, NuChar(b))),
            ((-1, 1), mp_st_pair(b, WeilOdd(a)), so_st_pair(-1, b, NuChar(a))),
            ((-1, -1), ThetaLift(True, 2, 1, -1, b, OExt(NuChar(ab), chim1(a) * chim1(b))),
             TwistNu(ThetaLift(False, 1, 2, 1, b, WeilOdd(a)), b)),
        ]
        return _sc_row("steinberg-pair", rows)

    if len(pieces) == 1 and isinstance(pieces[0], PieceSt):
        raise RowNotFound("a single S_2 constituent is 2-dimensional, not a parameter of Mp(4)")

    raise RowNotFound(f"no tabulated row for constituents {pieces!r}")


def principal_shimura_row(place: Place, a: SquareClass) -> SCRow:
    """The chi_a x S_4 row (tempered L-parameter with one Steinberg-type block)."""
    if not place.is_nonarch:
        raise RowNotFound("rows are tabulated at nonarchimedean places only")
    lab = a.label
    if a.is_trivial:
        rows = [
            ((1,), MpStTwist("1", -1), SOStTwist(1, "1")),
            ((-1,), MpStTwist("1", 1), SOStTwist(-1, "1")),
        ]
    else:
        rows = [
            ((1,), MpStTwist(lab, 1), SOStTwist(1, lab)),
            ((-1,), MpStTwist(lab, -1), SOStTwist(-1, lab)),
        ]
    return _sc_row("steinberg-S4", rows)


def orthogonal_shimura_row(tau_tag: str) -> SCRow:
    """The rho x S_2 row for an irreducible orthogonal rho (tau supercuspidal)."""
    tau = SC2(tau_tag)
    rows = [
        ((1,), MpStTau(tau), SOStTau(tau)),
        ((-1,), mp_ds4([(("orthS2", tau_tag), -1)]), so_ds([(("orthS2", tau_tag), -1)])),
    ]
    return _sc_row("orthogonal-S2", rows)


# ---------------------------------------------------------------------------
# reducibility oracle (nonarchimedean composition series)


@dataclass(frozen=True)
class ReductionResult:
    reducible: bool
    constituents: tuple = ()  # (sub, quotient) or the two direct summands
    direct_sum: bool = False


IRREDUCIBLE = ReductionResult(False)


def _is_quad(char) -> bool:
    return isinstance(char, QuadChar)


def reduce_mp4_p1(char, s: Fraction, inner: Desc) -> ReductionResult:
    """Composition series of I_{P1,psi}(chi|.|^s, pi) on Mp(W_2), s >= 0.

    pi ranges over the genuine square-integrable representations of Mp(W_1)
    and the even elementary Weil representations.
    """
    if s < 0:
        raise UnsupportedInduction("normalize to s >= 0")
    if not isinstance(inner, (Mp2Member, WeilOdd, WeilEven, MpSt2)):
        raise UnsupportedInduction(f"unsupported inducing representation {inner!r}")
    if not _is_quad(char):
        return IRREDUCIBLE
    c = char.label
    if s == HALF:
        if isinstance(inner, (Mp2Member, WeilOdd)):
            if isinstance(inner, WeilOdd) and inner.label == c:
                return IRREDUCIBLE
            return ReductionResult(
                True, (mp_st_pair(c, inner), lq(MP4, [Seg(char, s)], inner))
            )
        if isinstance(inner, MpSt2):
            mu = inner.label
            if c != mu:
                sub = mp_st_pair(c, inner)
            elif c != "1":
                sub = MpGenNG(St2(c), True)
            else:
                sub = MpGenNG(St2("1"), False)
            return ReductionResult(True, (sub, lq(MP4, [Seg(char, s)], inner)))
        assert isinstance(inner, WeilEven)
        b = inner.label
        if c != b:
            sub = lq(MP4, [seg(b, HALF)], MpSt2(c))
        elif c != "1":
            sub = MpGenNG(St2(c), False)
        else:
            sub = MpGenNG(St2("1"), True)
        return ReductionResult(True, (sub, lq(MP4, [Seg(char, s)], inner)))
    if s == THREE_HALF:
        if isinstance(inner, MpSt2) and inner.label == c:
            return ReductionResult(
                True, (MpStTwist(c, 1), lq(MP4, [Seg(char, s)], inner))
            )
        if isinstance(inner, WeilOdd) and inner.label == c:
            return ReductionResult(True, (MpStTwist(c, -1), elementary_weil(2, -1, c)))
        if isinstance(inner, WeilEven) and inner.label == c:
            return ReductionResult(
                True, (lq(MP4, [GL2Seg(St2(c), Fraction(1))]), elementary_weil(2, 1, c))
            )
    return IRREDUCIBLE


def reduce_mp4_p2(tau, s: Fraction, omega_trivial: bool | None = None, self_dual: bool = True) -> ReductionResult:
    """Composition series of I_{P2,psi}(tau |det|^s) on Mp(W_2), s >= 0."""
    if s < 0:
        raise UnsupportedInduction("normalize to s >= 0")
    if isinstance(tau, St2):
        omega_trivial = True
    if omega_trivial is None:
        raise UnsupportedInduction("central character of tau must be specified")
    if omega_trivial and s == 0:
        return ReductionResult(True, (MpGenNG(tau, True), MpGenNG(tau, False)), direct_sum=True)
    if isinstance(tau, SC2) and self_dual and not omega_trivial and s == HALF:
        return ReductionResult(True, (MpStTau(tau), lq(MP4, [GL2Seg(tau, s)])))
    if isinstance(tau, St2) and s == 1:
        return ReductionResult(True, (MpStTwist(tau.label, 1), lq(MP4, [GL2Seg(tau, s)])))
    return IRREDUCIBLE


def reduce_so5_plus_q1(char, s: Fraction, inner: Desc) -> ReductionResult:
    """Composition series of I^+_{Q1}(chi|.|^s, sigma) on SO(V_2^+), s >= 0."""
    if s < 0:
        raise UnsupportedInduction("normalize to s >= 0")
    if not isinstance(inner, (Opaque, St2)):
        raise UnsupportedInduction(f"unsupported inducing representation {inner!r}")
    if not _is_quad(char):
        return IRREDUCIBLE
    so5p = ("SO", 2, 1)
    c = char.label
    if s == HALF:
        if isinstance(inner, Opaque):  # supercuspidal sigma
            return ReductionResult(True, (so_st_pair(1, c, inner), lq(so5p, [Seg(char, s)], inner)))
        mu = inner.label
        sub = so_st_pair(1, c, inner) if c != mu else SOGenNG(St2(c), True)
        return ReductionResult(True, (sub, lq(so5p, [Seg(char, s)], inner)))
    if s == THREE_HALF and isinstance(inner, St2) and inner.label == c:
        return ReductionResult(True, (SOStTwist(1, c), lq(so5p, [Seg(char, s)], inner)))
    return IRREDUCIBLE


def reduce_so5_plus_q2(tau, s: Fraction, omega_trivial: bool | None = None, self_dual: bool = True) -> ReductionResult:
    """Composition series of I^+_{Q2}(tau |det|^s) on SO(V_2^+), s >= 0."""
    if s < 0:
        raise UnsupportedInduction("normalize to s >= 0")
    so5p = ("SO", 2, 1)
    if isinstance(tau, St2):
        omega_trivial = True
    if omega_trivial is None:
        raise UnsupportedInduction("central character of tau must be specified")
    if omega_trivial and s == 0:
        return ReductionResult(True, (SOGenNG(tau, True), SOGenNG(tau, False)), direct_sum=True)
    if isinstance(tau, SC2) and self_dual and not omega_trivial and s == HALF:
        return ReductionResult(True, (SOStTau(tau), lq(so5p, [GL2Seg(tau, s)])))
    if isinstance(tau, St2) and s == 1:
        return ReductionResult(True, (SOStTwist(1, tau.label), lq(so5p, [GL2Seg(tau, s)])))
    return IRREDUCIBLE


def reduce_so5_minus_q1(char, s: Fraction, inner: Desc) -> ReductionResult:
    """Composition series of I^-_{Q1}(chi|.|^s, sigma) on SO(V_2^-), s >= 0."""
    if s < 0:
        raise UnsupportedInduction("normalize to s >= 0")
    if not isinstance(inner, (Opaque, NuChar)):
        raise UnsupportedInduction(f"unsupported inducing representation {inner!r}")
    if not _is_quad(char):
        return IRREDUCIBLE
    so5m = ("SO", 2, -1)
    c = char.label
    matches = isinstance(inner, NuChar) and inner.label == c
    if s == HALF and not matches:
        return ReductionResult(True, (so_st_pair(-1, c, inner), lq(so5m, [Seg(char, s)], inner)))
    if s == THREE_HALF and matches:
        return ReductionResult(True, (SOStTwist(-1, c), lq(so5m, [Seg(char, s)], inner)))
    return IRREDUCIBLE


def reducibility_oracle(group: str, parabolic: str, **kwargs) -> ReductionResult:
    """Dispatch by (group, parabolic): Mp4/P1, Mp4/P2, SO5+/Q1, SO5+/Q2, SO5-/Q1."""
    key = (group, parabolic)
    if key == ("Mp4", "P1"):
        return reduce_mp4_p1(kwargs["char"], kwargs["s"], kwargs["inner"])
    if key == ("Mp4", "P2"):
        return reduce_mp4_p2(
            kwargs["tau"], kwargs["s"], kwargs.get("omega_trivial"), kwargs.get("self_dual", True)
        )
    if key == ("SO5+", "Q1"):
        return reduce_so5_plus_q1(kwargs["char"], kwargs["s"], kwargs["inner"])
    if key == ("SO5+", "Q2"):
        return reduce_so5_plus_q2(
            kwargs["tau"], kwargs["s"], kwargs.get("omega_trivial"), kwargs.get("self_dual", True)
        )
    if key == ("SO5-", "Q1"):
        return reduce_so5_minus_q1(kwargs["char"], kwargs["s"], kwargs["inner"])
    raise UnsupportedInduction(f"no composition-series data for {group}/{parabolic}")
