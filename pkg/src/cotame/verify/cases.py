"""The case table for the lift lemmas.

Each case fixes the shape of the affine map through an ordered list of
substitutions for the matrix entries (later expressions may use earlier
ones).  Entries that are not substituted stay free.  Expressions use the
entry names a1..d3, u, the auxiliary symbols P, Q, S, T (derived from the
entries unless the case makes them free), and E = P*b2 + b1*c1 where a case
needs it to keep denominators monomial.

Expected leading coefficients are written without the monomial; the monomial
is t_f^delta t_g^gamma for the expected class index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from cotame.coeffs import ROSTER

ENTRY_NAMES = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3")
EXTENDED_ROSTER = ROSTER + ("E",)

# the vanishing chain assumed from case L6.ii on
L6_QUADRATIC = (
    "c1*c3 - c2^2",
    "b1*c3 - 2*b2*c2 + b3*c1",
    "a1*c3 - 2*a2*c2 + a3*c1 + b1*b3 - b2^2",
    "a1*b3 - 2*a2*b2 + a3*b1",
)


class UnknownCase(KeyError):
    def __str__(self):
        return f"unknown case {self.args[0]!r}; known: {', '.join(CASE_IDS)}"


@dataclass(frozen=True)
class Branch:
    """One shape of the affine map with its expectations.

    ``classes`` and ``leading`` are keyed by "R", "F", "G" (the images of
    t_r, t_f, t_g under phi'_u composed with the lift).  ``images`` holds
    exact polynomial identities, written with X1, X2, X3 (the images of
    x1, x2, x3), Y1, Y2, Y3 (phi'_u(x_i)) and Tr (phi'_u(t_r)).
    """

    label: str
    subs: tuple
    hypotheses: tuple = ()
    vanishing: tuple = ()
    identities: tuple = ()
    classes: dict = field(default_factory=dict)
    leading: dict = field(default_factory=dict)
    images: dict = field(default_factory=dict)
    witness: tuple | None = None


@dataclass(frozen=True)
class CaseSpec:
    id: str
    type: tuple
    invertible: tuple
    branches: tuple
    lift: str = "hat"
    params: tuple = ()
    check_in_B: bool = False

    @property
    def roster(self) -> tuple:
        return EXTENDED_ROSTER if "E" in self.params else ROSTER

    def free_symbols(self, branch: Branch) -> tuple:
        bound = {name for name, _ in branch.subs}
        free = [n for n in ENTRY_NAMES if n not in bound]
        free += [p for p in self.params if p not in bound]
        return tuple(free) + ("u",)


def _witness_hat(f_idx, r_idx, g_idx):
    (m5, n5), (m4, n4), (m6, n6) = f_idx, r_idx, g_idx
    return (m4, m5, m6, n4, n5, n6)


def _classes(r, f, g):
    return {"R": r, "F": f, "G": g}


def _hat_branch(label, subs, f_idx, r_idx, g_idx, **kw):
    return Branch(label, tuple(subs), classes=_classes(r_idx, f_idx, g_idx),
                  witness=_witness_hat(f_idx, r_idx, g_idx), **kw)


# -- cases L2 and L3 ----------------------------------------------------------

def _lemma2():
    # type (3,2,3): c2 = 0, pivots c1, b2, c3
    a = CaseSpec(
        "L2.A", (3, 2, 3), ("c1", "c3", "b2", "u"),
        (_hat_branch("", [("c2", "0")], (6, 8), (6 + 2, 9 + 2), (12 + 3, 17 + 3),
                     leading={"F": "c1*c3*u^12"}),),
    )
    # type (3,3,2): c3 = 0, pivots c1, c2, b3
    b = CaseSpec(
        "L2.B", (3, 3, 2), ("c1", "c2", "b3", "u"),
        (_hat_branch("", [("c3", "0")], (6, 8), (6 + 3, 9 + 3), (12 + 2, 17 + 2),
                     leading={"F": "-c2^2*u^12"}),),
    )
    return a, b


def _lemma3():
    a = CaseSpec(
        "L3.32", (3, 2, 2), ("c1", "b2", "b3", "u"),
        (_hat_branch("", [("c2", "0"), ("c3", "0")], (5, 7), (5 + 2, 8 + 2), (10 + 2, 15 + 2),
                     leading={"F": "-b3*c1*u^10"}),),
    )
    b = CaseSpec(
        "L3.23", (2, 2, 3), ("b1", "b2", "c3", "u"),
        (_hat_branch("", [("c1", "0"), ("c2", "0")], (5, 7), (5 + 2, 8 + 2), (10 + 3, 15 + 3),
                     leading={"F": "-b1*c3*u^10"}),),
    )
    return a, b


# -- case L4: type (3,2,1) --------------------------------------------------

_L4_BASE = [("c2", "0"), ("c3", "0"), ("b3", "0")]


def _lemma4():
    i = CaseSpec(
        "L4.i", (3, 2, 1), ("c1", "b2", "a3", "u"),
        (_hat_branch("", _L4_BASE, (4, 6), (6, 9), (9, 14),
                     hypotheses=("a3*c1 - b2^2",),
                     leading={"F": "(a3*c1 - b2^2)*u^8"}),),
    )
    a3 = [("a3", "b2^2/c1")]
    a2 = [("a2", "b1*b2/(2*c1)")]
    a1 = [("a1", "b1^2/(4*c1)")]
    va = ("a3*c1 - b2^2",)
    vb = va + ("a3*b1 - 2*a2*b2",)
    vc = vb + ("d3",)
    vd = vc + ("a1*a3 - a2^2",)
    ve = vd + ("d2",)
    vf = ve + ("d1",)
    branches = (
        _hat_branch("(3,5)", _L4_BASE + a3, (3, 5), (6, 8), (9, 12),
                    hypotheses=("a3*b1 - 2*a2*b2",), vanishing=va),
        _hat_branch("(3,4)", _L4_BASE + a3 + a2, (3, 4), (6, 8), (9, 12),
                    hypotheses=("d3",), vanishing=vb),
        _hat_branch("(2,4)", _L4_BASE + a3 + a2 + [("d3", "0")], (2, 4), (6, 8), (9, 12),
                    hypotheses=("a1*a3 - a2^2",), vanishing=vc),
        _hat_branch("(2,3)", _L4_BASE + a3 + a2 + a1 + [("d3", "0")], (2, 3), (6, 8), (9, 12),
                    hypotheses=("d2",), vanishing=vd),
        _hat_branch("(1,2)", _L4_BASE + a3 + a2 + a1 + [("d3", "0"), ("d2", "0")],
                    (1, 2), (6, 8), (9, 12), hypotheses=("d1",), vanishing=ve),
        _hat_branch("(0,1)", _L4_BASE + a3 + a2 + a1 + [("d3", "0"), ("d2", "0"), ("d1", "0")],
                    (0, 1), (6, 8), (9, 12), vanishing=vf),
    )
    ii = CaseSpec("L4.ii", (3, 2, 1), ("c1", "b2", "u"), branches)
    return i, ii


# -- case L5: type (1,2,3) --------------------------------------------------

_L5_BASE = [("c1", "0"), ("c2", "0"), ("b1", "0")]
_ZERO_D = [("d1", "0"), ("d2", "0"), ("d3", "0")]


def _l5i_branch(label, subs, f_idx, **kw):
    g, d = f_idx
    return _hat_branch(label, _L5_BASE + subs, f_idx, (2 + g, 3 + d), (3 + 2 * g, 4 + 2 * d), **kw)


def _lemma5():
    c3 = [("c3", "b2^2/a1")]
    b3 = [("b3", "2*a2*b2/a1")]
    a3 = [("a3", "a2^2/a1")]
    va = ("a1*c3 - b2^2",)
    vb = va + ("a1*b3 - 2*a2*b2",)
    vc = vb + ("d1",)
    vd = vc + ("a1*a3 - a2^2",)
    ve = vd + ("d2",)
    i = CaseSpec(
        "L5.i", (1, 2, 3), ("a1", "b2", "c3", "u"),
        (
            _l5i_branch("(4,6)", [], (4, 6), hypotheses=("a1*c3 - b2^2",),
                        leading={"F": "(a1*c3 - b2^2)*u^8"}),
            _l5i_branch("(3,5)", c3, (3, 5), hypotheses=("a1*b3 - 2*a2*b2",), vanishing=va),
            _l5i_branch("(3,4)", c3 + b3, (3, 4), hypotheses=("d1",), vanishing=vb),
            _l5i_branch("(2,4)", c3 + b3 + [("d1", "0")], (2, 4),
                        hypotheses=("a1*a3 - a2^2",), vanishing=vc),
            _l5i_branch("(2,3)", c3 + b3 + a3 + [("d1", "0")], (2, 3),
                        hypotheses=("d2",), vanishing=vd),
            _l5i_branch("(1,2)", c3 + b3 + a3 + [("d1", "0"), ("d2", "0")], (1, 2),
                        hypotheses=("d3",), vanishing=ve),
        ),
    )
    # (ii): the t_f coefficient alone survives; b2 - c3^2 != 0
    chain = [("a1", "b2^2/c3"), ("b3", "2*a2*c3/b2"), ("a3", "a2^2*c3/b2^2")]
    vanish = ("a1*c3 - b2^2", "a1*b3 - 2*a2*b2", "a1*a3 - a2^2", "d1", "d2", "d3")
    ii = CaseSpec(
        "L5.ii", (1, 2, 3), ("b2", "c3", "u"),
        (Branch(
            "", tuple(_L5_BASE + chain + _ZERO_D),
            hypotheses=("b2 - c3^2",),
            vanishing=vanish,
            identities=(
                ("a1 - 2*b2*c3 + c3^3", "(b2 - c3^2)^2/c3"),
                ("a1 - b2*c3", "b2*(b2 - c3^2)/c3"),
            ),
            classes=_classes((2, 4), (0, 1), (3, 6)),
            leading={
                "F": "a1*c3",
                "G": "a1^2*(a1 - 2*b2*c3 + c3^3)*u^6",
                "R": "a1*(a1 - b2*c3)*u^4",
            },
            images={"F": "a1*c3*tf"},
            witness=(2, 0, 3, 4, 1, 6),
        ),),
    )
    chain3 = [("b2", "c3^2"), ("a1", "c3^3"), ("b3", "2*a2/c3"), ("a3", "a2^2/c3^3")]
    iii = CaseSpec(
        "L5.iii", (1, 2, 3), ("c3", "u"),
        (Branch(
            "", tuple(_L5_BASE + chain3 + _ZERO_D),
            hypotheses=("a2",),
            vanishing=vanish + ("b2 - c3^2", "2*a2 - b3*c3"),
            classes=_classes((1, 3), (0, 1), (1, 4)),
            leading={"F": "c3^4"},
            images={
                "F": "c3^4*tf",
                "R": "a2*c3^4*Y1*tf + c3^6*Tr",
                "G": "a3*c3^8*Y1*tf^2 + b3*c3^8*Tr*tf + c3^9*tg",
            },
            witness=(1, 0, 1, 3, 1, 4),
        ),),
        lift="L5_iii",
    )
    iv = CaseSpec(
        "L5.iv", (1, 2, 3), ("c3", "u"),
        (Branch("", tuple(_L5_BASE + [("b2", "c3^2"), ("a1", "c3^3"), ("a2", "0"),
                                      ("b3", "0"), ("a3", "0")] + _ZERO_D)),),
        lift="none",
        check_in_B=True,
    )
    return i, ii, iii, iv


# -- case L6: type (3,3,3) --------------------------------------------------

def _l6_hat(label, subs, f_idx, **kw):
    g, d = f_idx
    return _hat_branch(label, subs, f_idx, (3 + g, 4 + d), (3 + 2 * g, 4 + 2 * d), **kw)


# the four quadratic conditions solved for c3, b3, a2, a3 (c1 invertible)
_L6_CHAIN = [
    ("c3", "c2^2/c1"),
    ("b3", "(2*b2*c2 - b1*c3)/c1"),
    ("a2", "a1*c2/c1 + b1*(b2*c1 - b1*c2)/(2*c1^2)"),
    ("a3", "(b2^2 - b1*b3 - a1*c3 + 2*a2*c2)/c1"),
]
# the same chain with P free: eqs. for (c1, c2, c3), b3, a3, and a2 via E
_L6_P_CHAIN = [
    ("c2", "-c1^2/P"),
    ("c3", "c1^3/P^2"),
    ("b2", "(E - b1*c1)/P"),
    ("b3", "-b1*c1^2/P^2 - 2*b2*c1/P"),
    ("a2", "E*b1/(2*P*c1) - a1*c1/P"),
    ("a3", "(P^2*b2^2 - 2*P*a2*c1^2 + 2*P*b1*b2*c1 - a1*c1^3 + b1^2*c1^2)/(P^2*c1)"),
    ("d3", "P/c1 - 2*c1*d2/P - c1^2*d1/P^2"),
]
# after (v): T free, b- and a-rows from T, d2 and d3 from P and T
_L6_T_CHAIN = [
    ("c2", "-c1^2/P"),
    ("c3", "c1^3/P^2"),
    ("b2", "-T*c1/P^2 - b1*c1/P"),
    ("b3", "2*T*c1^2/P^3 + b1*c1^2/P^2"),
    ("a1", "b1^2/(4*c1)"),
    ("a2", "-T*b1/(2*P^2) - b1^2/(4*P)"),
    ("a3", "T^2*c1/P^4 + T*b1*c1/P^3 + b1^2*c1/(4*P^2)"),
]
_L6_T_D = [
    ("d2", "-P^2/(2*c1^2) - c1*d1/P"),
    ("d3", "2*P/c1 + c1^2*d1/P^2"),
]
_D_CLOSURE = ("P^2*d3 + 2*P*c1*d2 + c1^2*d1", "P^3/c1")
_L6_V = "P^2*b2 + 2*P*b1*c1 - Q*c1^2"
_L6_VI = "P^2*b1^2 - 4*P*S*c1^2 - 2*P*T*b1 + 4*T^2"
_S_TARGET = "(P^2*b1^2 - 2*P*T*b1 + 4*T^2)/(4*P*c1^2)"


def _lemma6():
    cases = []
    q = L6_QUADRATIC
    cases.append(CaseSpec(
        "L6.i", (3, 3, 3), ("c1", "c2", "c3", "u"),
        (
            _l6_hat("(6,8)", [], (6, 8), hypotheses=(q[0],),
                    leading={"F": f"({q[0]})*u^12"}),
            _l6_hat("(5,7)", _L6_CHAIN[:1], (5, 7), hypotheses=(q[1],), vanishing=q[:1],
                    leading={"F": f"-({q[1]})*u^10"}),
            _l6_hat("(4,6)", _L6_CHAIN[:2], (4, 6), hypotheses=(q[2],), vanishing=q[:2],
                    leading={"F": f"({q[2]})*u^8"}),
            _l6_hat("(3,5)", _L6_CHAIN[:2] + [("a3", "(b2^2 - b1*b3 - a1*c3 + 2*a2*c2)/c1")],
                    (3, 5), hypotheses=(q[3],), vanishing=q[:3],
                    leading={"F": f"-({q[3]})*u^6"}),
        ),
    ))
    p0 = [("d3", "(2*c2*d2 - c3*d1)/c1")]
    a1 = [("a1", "b1^2/(4*c1)")]
    e = "b2*c1 - b1*c2"

    def ii_branch(label, subs, f_idx, hyps, vanish):
        return _hat_branch(label, subs, f_idx, (6, 8), (9, 12), hypotheses=(e,) + hyps,
                           vanishing=q + ("P",) + vanish,
                           identities=(("a1*a3 - a2^2", f"({e})^2*(4*a1*c1 - b1^2)/(4*c1^4)"),))

    cases.append(CaseSpec(
        "L6.ii", (3, 3, 3), ("c1", "c2", "u"),
        (
            ii_branch("(2,4)", _L6_CHAIN + p0, (2, 4), ("4*a1*c1 - b1^2",), ()),
            ii_branch("(2,3)", a1 + _L6_CHAIN + p0, (2, 3), ("Q",), ("a1*a3 - a2^2",)),
            ii_branch("(1,2)", a1 + _L6_CHAIN + [("d2", "c2*d1/c1")] + p0, (1, 2), ("S",),
                      ("a1*a3 - a2^2", "Q")),
            ii_branch("(0,1)", a1 + _L6_CHAIN + [("d1", "0"), ("d2", "0")] + p0, (0, 1), (),
                      ("a1*a3 - a2^2", "Q", "S", "d1*d3 - d2^2")),
        ),
    ))
    cases.append(CaseSpec(
        "L6.iii", (3, 3, 3), ("c1", "c2", "P", "u"),
        (Branch(
            "", tuple(_L6_CHAIN + [("d3", "(P + 2*c2*d2 - c3*d1)/c1")]),
            hypotheses=("P*c2 + c1^2",),
            vanishing=q,
            identities=(("P^2*c3 + 2*P*c1*c2 + c1^3", "(P*c2 + c1^2)^2/c1"),),
            classes=_classes((6, 8), (3, 4), (9, 12)),
            leading={
                "F": "P*u^6",
                "G": "(P^2*c3 + 2*P*c1*c2 + c1^3)*u^18",
                "R": "(P*c2 + c1^2)*u^12",
            },
            witness=(6, 3, 9, 8, 4, 12),
        ),),
        params=("P",),
    ))
    iv_common = dict(
        vanishing=q + ("P*c2 + c1^2",),
        identities=(_D_CLOSURE, ("a1*c3 - 2*a2*c2 + a3*c1", "(P*b2 + b1*c1)^2/P^2")),
    )
    cases.append(CaseSpec(
        "L6.iv", (3, 3, 3), ("c1", "P", "E", "u"),
        (Branch(
            "", tuple(_L6_P_CHAIN),
            hypotheses=("a1*a3 - a2^2",),
            classes=_classes((5, 8), (3, 4), (7, 12)),
            leading={
                "F": "P*u^6",
                "G": "c1^3*(a1*a3 - a2^2)^2*u^14/P^2",
                "R": "-c1^2*(a1*a3 - a2^2)*u^10/P",
            },
            witness=(5, 3, 7, 8, 4, 12),
            **iv_common,
        ),),
        params=("P", "E"),
    ))
    v_common = dict(iv_common)
    v_common["vanishing"] = iv_common["vanishing"] + ("a1*a3 - a2^2",)
    cases.append(CaseSpec(
        "L6.v", (3, 3, 3), ("c1", "P", "E", "u"),
        (Branch(
            "", tuple(a1 + _L6_P_CHAIN),
            hypotheses=(_L6_V,),
            classes=_classes((5, 7), (3, 4), (7, 10)),
            leading={
                "F": "P*u^6",
                "G": f"({_L6_V})^2*u^14/(P^2*c1)",
                "R": f"-({_L6_V})*u^10/P",
            },
            witness=(5, 3, 7, 7, 4, 10),
            **v_common,
        ),),
        params=("P", "E"),
    ))
    vi_vanish = q + ("P*c2 + c1^2", "a1*a3 - a2^2", _L6_V)
    vi_ids = (_D_CLOSURE, ("Q", "(P*b1 - T)/c1"))
    g_lead = "(P^2*d3 + 2*P*c1*d2 + c1^2*d1)*u^12"
    cases.append(CaseSpec(
        "L6.vi", (3, 3, 3), ("c1", "P", "T", "u"),
        (Branch(
            "", tuple(_L6_T_CHAIN + _L6_T_D),
            hypotheses=(_L6_VI,),
            vanishing=vi_vanish,
            identities=vi_ids,
            classes=_classes((4, 6), (3, 4), (6, 8)),
            leading={"F": "P*u^6", "G": g_lead, "R": f"({_L6_VI})*u^8/(4*P^2)"},
            witness=(4, 3, 6, 6, 4, 8),
        ),),
        lift="L6_vi_viii",
        params=("P", "T"),
    ))
    d1 = [("d1", f"({_S_TARGET} - 2*P*a1/c1 - P^2*a2/c1^2)*P^4/(T^2*c1)")]
    cases.append(CaseSpec(
        "L6.vii", (3, 3, 3), ("c1", "P", "T", "u"),
        (Branch(
            "", tuple(_L6_T_CHAIN + d1 + _L6_T_D),
            hypotheses=("P^2*T - c1^5",),
            vanishing=vi_vanish + (_L6_VI,),
            identities=vi_ids + (("S", _S_TARGET),),
            classes=_classes((3, 5), (3, 4), (6, 8)),
            leading={"F": "P*u^6", "G": g_lead, "R": "T^2*(P^2*T - c1^5)*u^6/(P^5*c1)"},
            witness=(3, 3, 6, 5, 4, 8),
        ),),
        lift="L6_vi_viii",
        params=("P", "T"),
    ))
    f_image = ("P*Y3 + (P*b1 - c1^5/P^2)/c1*Y2 + (P*b1^2 - 2*b1*c1^5/P^2 + 4*c1^10/P^5)/(4*c1^2)*Y1"
            " + c1^12/P^8*tf + 3*P^4/(4*c1^4)")
    cases.append(CaseSpec(
        "L6.viii", (3, 3, 3), ("c1", "P", "u"),
        (Branch(
            "", tuple([("T", "c1^5/P^2")] + _L6_T_CHAIN + d1 + _L6_T_D),
            vanishing=vi_vanish + (_L6_VI, "P^2*T - c1^5"),
            identities=vi_ids + (("S", _S_TARGET), ("d1", "P^3/c1^3"),
                                 ("d2", "-3*P^2/(2*c1^2)"), ("d3", "3*P/c1")),
            classes=_classes((3, 4), (3, 4), (6, 8)),
            leading={"F": "P*u^6", "G": g_lead, "R": "-P^3*u^6/(4*c1^2)"},
            images={"F": f_image},
            witness=(3, 3, 6, 4, 4, 8),
        ),),
        lift="L6_vi_viii",
        params=("P",),
    ))
    return tuple(cases)


CASES = {c.id: c for c in (*_lemma2(), *_lemma3(), *_lemma4(), *_lemma5(), *_lemma6())}
CASE_IDS = tuple(CASES)


def get_case(case_id: str) -> CaseSpec:
    try:
        return CASES[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None
