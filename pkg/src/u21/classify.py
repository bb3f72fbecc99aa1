"""Classification case logic: dimension tables, finite principal-series
structure, p-adic reducibility and composition shape, and the bridge
between the two through parahoric restriction.

The p-adic statements are encoded as case dispatch on congruences of ell
against q-1, q+1 and q^2-q+1; cuspidal constituents carry opaque labels
whose finite shadows have known dimensions, which is what the bridge
checks against MeatAxe reports.  Regimes outside the theorems'
hypotheses raise UnsupportedCase rather than guessing.
"""

from __future__ import annotations

from . import gf
from .errors import MismatchedParameters, UnsupportedCase
from .modrep import _prime_to_ell_part, label_params


class IrreducibleLabel:
    """A named composition factor; p-adic labels carry no dimensions."""

    def __init__(self, kind, parameters=None, dim_ladic=None, dim_mod=None):
        self.kind = kind
        self.parameters = parameters or {}
        self.dim_ladic = dim_ladic
        self.dim_mod = dim_mod

    def __repr__(self):
        d = f", dim={self.dim_mod}" if self.dim_mod is not None else ""
        return f"<{self.kind}{d}>"


class StructureReport:
    def __init__(self, reducible, length, factors, flags, clause, notes=None):
        self.reducible = reducible
        self.length = length
        self.factors = factors        # list of (IrreducibleLabel, mult)
        self.flags = flags            # dict of booleans
        self.clause = clause
        self.notes = notes or []

    def to_json(self):
        return {
            "reducible": self.reducible,
            "length": self.length,
            "factors": [
                {"kind": lab.kind, "dim_mod": lab.dim_mod, "mult": m,
                 "parameters": lab.parameters}
                for lab, m in self.factors],
            "flags": self.flags,
            "clause": self.clause,
            "notes": self.notes,
        }


def _flags(**kw):
    base = {"uniserial": False, "semisimple": False,
            "sub_iso_quotient": False, "has_cuspidal": False}
    base.update(kw)
    return base


def ladic_dimension_table(q):
    return {
        "sigma": (q - 1) * (q * q - q + 1),
        "tau": (q - 1) * (q + 1) ** 2,
        "nu": q * (q - 1),
        "St": q ** 3,
        "R_1": q * q - q + 1,
        "R_St": q * (q * q - q + 1),
        "counts": {
            "sigma_family": (q + 1) * q * (q - 1) // 6,
            "tau_family": (q + 1) * q * (q - 1) // 3,
            "nu_family": q + 1,
        },
    }


def modular_constituent_dims(q, ell):
    tab = ladic_dimension_table(q)
    out = {"nu_bar": tab["nu"], "sigma_bar": tab["sigma"],
           "sigma_bar_H": q - 1}
    if ell != 0 and ell != 3 and (q * q - q + 1) % ell == 0:
        out["tau_plus"] = tab["tau"] - tab["nu"]
    elif ell == 2 and (q - 1) % 4 == 0:
        out["tau_plus"] = tab["tau"] - 2 * tab["nu"]
    return out


def _lab(kind, q, ell, **params):
    dims = modular_constituent_dims(q, ell)
    table = {
        "triv": 1, "St": q ** 3, "nu": dims["nu_bar"],
        "sigma3": dims["sigma_bar"], "tau_plus": dims.get("tau_plus"),
        "R_1H": q * q - q + 1, "R_StH": q * (q * q - q + 1),
        "StH": q, "sigma_bar": q - 1,
    }
    return IrreducibleLabel(kind, params, dim_mod=table[kind])


def finite_ps_structure(q, ell, chi1_exponent, chi2_exponent, group_rank):
    """Composition structure of the finite principal series i_B^G(chi)."""
    n1 = q * q - 1
    n2 = q + 1
    if ell == 0:
        e1, e2 = chi1_exponent % n1, chi2_exponent % n2
    else:
        e1 = _prime_to_ell_part(chi1_exponent, n1, ell)
        e2 = _prime_to_ell_part(chi2_exponent, n2, ell)
    regular = (e1 * (q + 1)) % n1 != 0
    chi1_trivial = e1 == 0
    dim_total = q ** 3 + 1 if group_rank == 3 else q + 1

    if regular:
        lab = IrreducibleLabel("irreducible_ps", {"e1": e1, "e2": e2},
                              dim_mod=dim_total)
        return StructureReport(False, 1, [(lab, 1)], _flags(), "regular")

    if group_rank == 2:
        if ell != 0 and (q + 1) % ell == 0:
            rep = StructureReport(
                True, 3,
                [(_lab("triv", q, ell, e2=e2), 2),
                 (_lab("sigma_bar", q, ell, e1=e1), 1)],
                _flags(uniserial=True, sub_iso_quotient=True,
                       has_cuspidal=True),
                "rank2-l-divides-q-plus-1")
            rep.notes.append("socle layers [triv],[sigma_bar],[triv]")
            return rep
        return StructureReport(
            True, 2,
            [(_lab("triv", q, ell, e2=e2), 1), (_lab("StH", q, ell), 1)],
            _flags(semisimple=True), "rank2-semisimple")

    banal = ell == 0 or ((q - 1) * (q + 1) * (q * q - q + 1)) % ell != 0

    if chi1_trivial:
        if ell == 2:
            if (q + 1) % 4 == 0:
                return _uniserial5(q, ell, e2)
            return StructureReport(
                True, 4,
                [(_lab("triv", q, ell, e2=e2), 2),
                 (_lab("nu", q, ell), 1), (_lab("tau_plus", q, ell), 1)],
                _flags(sub_iso_quotient=True, has_cuspidal=True),
                "l=2-4-divides-q-minus-1",
                notes=["socle layers [triv],[nu,tau_plus],[triv]",
                       "cuspidal part semisimple nu+tau_plus"])
        if ell == 3 and (q + 1) % 3 == 0:
            raise UnsupportedCase(
                "l = 3 dividing q+1 with chi1 trivial is outside the "
                "supported decomposition cases")
        if banal or (q - 1) % ell == 0:
            clause = "banal" if banal else "l-divides-q-minus-1"
            return StructureReport(
                True, 2,
                [(_lab("triv", q, ell, e2=e2), 1), (_lab("St", q, ell), 1)],
                _flags(semisimple=True), clause)
        if (q * q - q + 1) % ell == 0:
            return StructureReport(
                True, 3,
                [(_lab("triv", q, ell, e2=e2), 2),
                 (_lab("tau_plus", q, ell), 1)],
                _flags(uniserial=True, sub_iso_quotient=True,
                       has_cuspidal=True),
                "l-divides-q2-q-plus-1",
                notes=["socle layers [triv],[tau_plus],[triv]"])
        return _uniserial5(q, ell, e2)

    # chi1 nontrivial but pulled back from the norm-one circle
    if ell != 0 and (q + 1) % ell == 0:
        return StructureReport(
            True, 3,
            [(_lab("R_1H", q, ell, e1=e1), 2),
             (_lab("sigma3", q, ell, e1=e1, e2=e2), 1)],
            _flags(uniserial=True, sub_iso_quotient=True, has_cuspidal=True),
            "ramified-l-divides-q-plus-1",
            notes=["socle layers [R_1H],[sigma3],[R_1H]"])
    return StructureReport(
        True, 2,
        [(_lab("R_1H", q, ell, e1=e1), 1), (_lab("R_StH", q, ell, e1=e1), 1)],
        _flags(semisimple=True), "ramified-semisimple")


def _uniserial5(q, ell, e2):
    return StructureReport(
        True, 5,
        [(_lab("triv", q, ell, e2=e2), 2), (_lab("nu", q, ell), 2),
         (_lab("sigma3", q, ell), 1)],
        _flags(uniserial=True, sub_iso_quotient=True, has_cuspidal=True),
        "l-divides-q-plus-1",
        notes=["socle layers [triv],[nu],[sigma3],[nu],[triv]",
               "maximal cuspidal subquotient uniserial [nu],[sigma3],[nu]"])


UNRAMIFIED_CLASSES = ("trivial", "delta_half", "delta_minus_half",
                      "eta_delta_quarter", "eta_delta_minus_quarter")


class PadicCharDescriptor:
    """Level and chi1-class of a character of the p-adic torus."""

    def __init__(self, level, chi1_class, q, ell, chi2_det=True, chi_order=2):
        self.level = level            # "zero" | "positive"
        self.chi1_class = chi1_class
        self.q = q
        self.ell = ell
        self.chi2_det = chi2_det
        self.chi_order = chi_order    # order of the pulled-back character
        self.collapsed = False

    def copy(self):
        d = PadicCharDescriptor(self.level, self.chi1_class, self.q,
                                self.ell, self.chi2_det, self.chi_order)
        d.collapsed = self.collapsed
        return d


def collapse(desc):
    """Apply the mod-ell character identifications; idempotent."""
    d = desc.copy()
    q, ell = d.q, d.ell
    if ell == 0 or d.collapsed:
        d.collapsed = True
        return d
    if d.chi1_class in UNRAMIFIED_CLASSES:
        if ell == 2:
            d.chi1_class = "trivial"
        elif (q + 1) % ell == 0:
            # delta_B and the quadratic eta both die mod ell
            d.chi1_class = "trivial"
        elif (q * q - q + 1) % ell == 0:
            if d.chi1_class == "eta_delta_quarter":
                d.chi1_class = "delta_minus_half"
            elif d.chi1_class == "eta_delta_minus_quarter":
                d.chi1_class = "delta_half"
        elif (q - 1) % ell == 0:
            if d.chi1_class in ("delta_half", "delta_minus_half"):
                d.chi1_class = "trivial"
            # eta classes reduce to the quadratic eta itself; keep class
    elif d.chi1_class == "unitary_pullback_nontrivial":
        order = d.chi_order
        while order % ell == 0:
            order //= ell
        d.chi_order = order
        if order == 1:
            d.chi1_class = "trivial"
    d.collapsed = True
    return d


def padic_reducibility(desc):
    """(verdict, clause) per the reducibility-point theorem."""
    d = collapse(desc)
    q, ell = d.q, d.ell
    delta_trivial = ell != 0 and (q * q - 1) % ell == 0
    if d.chi1_class in ("delta_half", "delta_minus_half"):
        return True, "clause1"
    if d.chi1_class == "trivial" and delta_trivial and d.level == "zero":
        return True, "clause1"
    if d.chi1_class in ("eta_delta_quarter", "eta_delta_minus_quarter"):
        return True, "clause2"
    if d.chi1_class == "unitary_pullback_nontrivial":
        return True, "clause3"
    return False, "none"


def _plab(kind, **params):
    return IrreducibleLabel(kind, params)


def padic_ps_structure(desc):
    d = collapse(desc)
    q, ell = d.q, d.ell
    if d.level == "positive" and d.chi1_class != "unitary_pullback_nontrivial":
        raise UnsupportedCase(
            "positive level is covered only for chi1 trivial on F0^x")
    red, clause = padic_reducibility(desc)
    if not red:
        return StructureReport(False, 1, [(_plab("irreducible_ps"), 1)],
                               _flags(), "irreducible")
    if d.level == "positive":
        if ell != 0 and (q + 1) % ell == 0:
            return StructureReport(
                True, 4,
                [(_plab("pi_ram"), 2),
                 (_plab("I_kappa_x(sigma_bar_H)", chi_order=d.chi_order), 1),
                 (_plab("I_kappa_y(sigma_bar_H)", chi_order=d.chi_order), 1)],
                _flags(sub_iso_quotient=True, has_cuspidal=True),
                "poslev-l-divides-q-plus-1",
                notes=["cuspidal part I_kappa_x + I_kappa_y, both of "
                       "U(1,1)-type"])
        return StructureReport(
            True, 2, [(_plab("pi_sub"), 1), (_plab("pi_quot"), 1)],
            _flags(), "poslev-length-two")

    if d.chi1_class == "unitary_pullback_nontrivial":
        if ell != 0 and (q + 1) % ell == 0:
            return StructureReport(
                True, 4,
                [(_plab("pi_ram"), 2),
                 (_plab("I_Lambda_x(sigma3)", chi_order=d.chi_order), 1),
                 (_plab("I_Lambda_y(sigma_bar_H)", chi_order=d.chi_order), 1)],
                _flags(sub_iso_quotient=True, has_cuspidal=True),
                "ramified-l-divides-q-plus-1")
        return StructureReport(
            True, 2, [(_plab("pi_sub"), 1), (_plab("pi_quot"), 1)],
            _flags(), "ramified-length-two")

    # unramified: chi is delta_B^{+-1/2} (possibly trivial after collapse)
    if d.chi1_class in ("eta_delta_quarter", "eta_delta_minus_quarter"):
        if ell != 0 and (q - 1) % ell == 0:
            return StructureReport(
                True, 2, [(_plab("pi_eta_sub"), 1), (_plab("pi_eta_quot"), 1)],
                _flags(semisimple=True), "eta-l-divides-q-minus-1")
        return StructureReport(
            True, 2, [(_plab("pi_eta_sub"), 1), (_plab("pi_eta_quot"), 1)],
            _flags(), "eta-banal")
    banal = ell == 0 or ((q - 1) * (q + 1) * (q * q - q + 1)) % ell != 0
    if banal:
        return StructureReport(
            True, 2, [(_plab("1_G"), 1), (_plab("St_G"), 1)],
            _flags(), "ur1",
            notes=["unique sub 1_G, unique quotient St_G, non-split"])
    if ell == 2:
        if (q - 1) % 4 == 0:
            return StructureReport(
                True, 5,
                [(_plab("1_G"), 2), (_plab("I_Lambda_x(nu_bar)"), 1),
                 (_plab("I_Lambda_x(tau_plus)"), 1),
                 (_plab("I_Lambda_y(sigma_bar_H)"), 1)],
                _flags(sub_iso_quotient=True, has_cuspidal=True), "ur5",
                notes=["cuspidal subquotients semisimple and pairwise "
                       "non-isomorphic"])
        return _ur4(q)
    if (q - 1) % ell == 0:
        return StructureReport(
            True, 2, [(_plab("1_G"), 1), (_plab("St_G"), 1)],
            _flags(semisimple=True), "ur2")
    if (q * q - q + 1) % ell == 0 and ell != 3:
        return StructureReport(
            True, 3,
            [(_plab("1_G"), 1), (_plab("I_Lambda_x(tau_plus)"), 1),
             (_plab("nu_G"), 1)],
            _flags(has_cuspidal=True), "ur3",
            notes=["unique sub 1_G, unique quotient nu_G, not isomorphic"])
    if (q + 1) % ell == 0:
        if ell == 3:
            raise UnsupportedCase(
                "l = 3 dividing q+1 is outside the unramified "
                "decomposition theorem")
        return _ur4(q)
    raise UnsupportedCase(f"no clause covers q={q}, ell={ell}")


def _ur4(q):
    return StructureReport(
        True, 6,
        [(_plab("1_G"), 2), (_plab("I_Lambda_x(nu_bar)"), 2),
         (_plab("I_Lambda_x(sigma3)"), 1), (_plab("I_Lambda_y(sigma_bar_H)"), 1)],
        _flags(sub_iso_quotient=True, has_cuspidal=True), "ur4",
        notes=["maximal proper submodule of St is rho + I_Lambda_y, "
               "rho uniserial [nu],[sigma3],[nu]"])


_CUSPIDAL_INNER = ("nu_bar", "sigma3", "tau_plus", "sigma_bar_H")


def _cuspidal_dim(inner, q, ell):
    dims = modular_constituent_dims(q, ell)
    return {"nu_bar": dims["nu_bar"], "sigma3": dims["sigma_bar"],
            "tau_plus": dims.get("tau_plus"),
            "sigma_bar_H": dims["sigma_bar_H"]}[inner]


def _report_params(report):
    for fm in report.factor_modules.values():
        return label_params(fm.label)
    return {}


def bridge_check(desc, report_x, report_y):
    """Match p-adic cuspidal predictions against finite MeatAxe reports."""
    if desc.level != "zero":
        raise MismatchedParameters("bridge applies to level-zero characters")
    q, ell = desc.q, desc.ell
    for report, rank in ((report_x, 3), (report_y, 2)):
        params = _report_params(report)
        if params.get("q0") != q or params.get("ell") != ell \
                or params.get("rank") != rank:
            raise MismatchedParameters(
                f"report {params} does not match q={q}, ell={ell}, "
                f"rank={rank}")
    padic = padic_ps_structure(desc)
    predicted = {"x": {}, "y": {}}
    for lab, mult in padic.factors:
        if lab.kind.startswith("I_Lambda_"):
            side = lab.kind[len("I_Lambda_")]
            inner = lab.kind[lab.kind.index("(") + 1:-1]
            dim = _cuspidal_dim(inner, q, ell)
            predicted[side][dim] = predicted[side].get(dim, 0) + mult
    cusp_dims_x = {d for i in ("nu_bar", "sigma3", "tau_plus")
                   if (d := _cuspidal_dim(i, q, ell)) is not None}
    cusp_dims_y = {_cuspidal_dim("sigma_bar_H", q, ell)}
    for side, report, cusp_dims in (("x", report_x, cusp_dims_x),
                                    ("y", report_y, cusp_dims_y)):
        found = {d: m for _, d, m in report.factors if d in cusp_dims}
        for dim, mult in predicted[side].items():
            if found.get(dim, 0) < mult:
                return False
        for dim in found:
            if dim not in predicted[side]:
                return False
    return True
