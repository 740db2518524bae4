"""Named families: how each is built and which checks certify it."""

from __future__ import annotations

import itertools
from typing import Any, Callable

import numpy as np

from . import duality, octonions, probability, realgeom, sic
from .certificate import Certificate
from .golden import PHI, GoldenScalar
from .pauli import (
    ALL_PAULI_LABELS,
    PauliLabel,
    antisymmetric_labels,
    is_antisymmetric,
    three_qubit_pauli,
    transpose_antisymmetric,
    verify_ghz_identity,
)

FAMILIES = (
    "qubit-plus",
    "qubit-minus",
    "hesse-coxeter",
    "hesse-orbit",
    "hoggar-plus",
    "hoggar-minus",
    "mub-dual",
    "twin-incidence",
    "fano-28",
    "so8-28",
    "icosahedron",
    "trine-r2",
    "bounds",
)

SIC_FAMILIES = ("qubit-plus", "qubit-minus", "hesse-coxeter", "hesse-orbit", "hoggar-plus", "hoggar-minus")


def build_sic(family: str) -> sic.SicEnsemble:
    builders: dict[str, Callable[[], sic.SicEnsemble]] = {
        "qubit-plus": lambda: sic.qubit_sic(1),
        "qubit-minus": lambda: sic.qubit_sic(-1),
        "hesse-coxeter": sic.hesse_sic_coxeter,
        "hesse-orbit": sic.hesse_sic_orbit,
        "hoggar-plus": lambda: sic.hoggar_sic(1),
        "hoggar-minus": lambda: sic.hoggar_sic(-1),
    }
    if family not in builders:
        raise KeyError(f"{family!r} is not a SIC family")
    return builders[family]()


def build(family: str) -> Any:
    """Construct the family's primary object."""
    if family in SIC_FAMILIES:
        return build_sic(family)
    if family == "mub-dual":
        return duality.mub_dual()
    if family == "twin-incidence":
        return duality.twin_incidence()
    if family == "fano-28":
        return octonions.antiflag_lines_28()
    if family == "so8-28":
        return octonions.so8_lines_28()
    if family == "icosahedron":
        return realgeom.icosahedron_orbit()
    if family == "trine-r2":
        return realgeom.trine_r2()[1]
    if family == "bounds":
        return bounds_table()
    raise KeyError(f"unknown family {family!r}")


def bounds_table() -> dict[str, Any]:
    return {
        "gerzon": {
            "(2, real)": realgeom.gerzon_bound(2, "real"),
            "(3, real)": realgeom.gerzon_bound(3, "real"),
            "(7, real)": realgeom.gerzon_bound(7, "real"),
            "(23, real)": realgeom.gerzon_bound(23, "real"),
            "(2, complex)": realgeom.gerzon_bound(2, "complex"),
            "(3, complex)": realgeom.gerzon_bound(3, "complex"),
            "(8, complex)": realgeom.gerzon_bound(8, "complex"),
            "(3, octonionic3)": realgeom.gerzon_bound(3, "octonionic3"),
        },
        "max_zeros": {
            "(2, complex)": probability.max_zero_bound(2, "complex"),
            "(3, complex)": probability.max_zero_bound(3, "complex"),
            "(8, complex)": probability.max_zero_bound(8, "complex"),
            "(23, real)": probability.max_zero_bound(23, "real"),
        },
        "n_eff_pure": {str(d): probability.n_eff_pure(d) for d in (2, 3, 8)},
        "fibonacci_lucas": probability.fibonacci_lucas_dims(5),
    }


# -- check suites -------------------------------------------------------------


def _qubit_checks(cert: Certificate, sign: int, tol: float) -> None:
    mine = sic.qubit_bloch_vectors(sign)
    other = sic.qubit_bloch_vectors(-sign)
    pts = mine + other
    dots = [float(np.dot(a, b)) for a, b in itertools.combinations(pts, 2)]
    cube = max(min(abs(x - t) for t in (1, -1, 1 / 3, -1 / 3)) for x in dots)
    cert.add("bloch cube dot products", cube, tol)
    e, twin = sic.qubit_sic(sign), sic.qubit_sic(-sign)
    orth = np.array([[abs(np.trace(a @ b)) < 1e-9 for b in twin.projectors] for a in e.projectors])
    perm = orth.sum(0).tolist() == [1] * 4 and orth.sum(1).tolist() == [1] * 4
    cert.require("twin orthogonality is a perfect matching", perm)
    zeros = [
        probability.count_zeros(probability.represent(e, p)) for p in twin.projectors
    ]
    cert.require("antipodal states saturate zero bound 1", zeros == [probability.max_zero_bound(2)] * 4)


def _hesse_coxeter_checks(cert: Certificate, tol: float) -> None:
    raw = sic.coxeter_table()
    self_dev = max(abs(abs(np.vdot(u, u)) ** 2 - 4) for u in raw)
    cross_dev = max(abs(abs(np.vdot(u, v)) ** 2 - 1) for u, v in itertools.combinations(raw, 2))
    cert.add("unnormalized self overlap = 4", self_dev, tol)
    cert.add("unnormalized distinct overlap = 1", cross_dev, tol)
    _, fids = sic.match_lines(sic.hesse_sic_coxeter().vectors(), sic.hesse_sic_orbit().vectors())
    cert.add("projective match to orbit route", max(1 - f for f in fids), tol)


def _hesse_orbit_checks(cert: Certificate, tol: float) -> None:
    verts = sic.hessian_polyhedron()
    symbols = dict(verts)
    w = np.exp(2j * np.pi / 3)
    cert.require("hessian polyhedron has 27 vertices", len(verts) == 27)
    dev = max(
        float(np.max(np.abs(symbols["230"] - np.array([w**2, -1, 0])))),
        float(np.max(np.abs(symbols["103"] - np.array([-w, 0, 1])))),
    )
    cert.add("segre symbols 230 and 103", dev, tol)
    diam = sic.hessian_diameters()
    cert.require("9 diameters of 3 vertices", len(diam) == 9 and all(len(c) == 3 for c in diam))
    rep = sic.hessian_adjacency_classes()
    cert.require("adjacency classes match symbol agreement", rep.consistent and rep.pairs == 324)
    e = sic.hesse_sic_orbit()
    cox = [v / np.sqrt(2) for v in sic.coxeter_table()]
    _, fids = sic.match_lines(e.vectors(), cox)
    cert.add("projective match to coxeter route", max(1 - f for f in fids), tol)


def _hoggar_checks(cert: Certificate, sign: int, tol: float) -> None:
    psi = sic.hoggar_fiducial(sign)
    cert.add("fiducial norm", abs(np.linalg.norm(psi) - 1), tol)
    raw = np.array([-1 + sign * 2j] + [1] * 7)
    cert.add("fiducial direction", 1 - abs(np.vdot(raw / np.linalg.norm(raw), psi)) ** 2, tol)


def _mub_checks(cert: Certificate, tol: float) -> None:
    plane = duality.affine_plane9()
    axioms = duality.check_affine_plane(plane)
    cert.require("affine plane: each point on 4 lines", axioms["each point on 4 lines"])
    cert.require("affine plane: parallel disjoint, others meet once", axioms["intersections"])
    e = sic.hesse_sic_orbit()
    dual = duality.mub_dual(e)
    cert.add("reconstructed states are pure", dual.purity_deviation, tol)
    within, cross = 0.0, 0.0
    for a, b in itertools.combinations(range(12), 2):
        f = abs(np.vdot(dual.states[a], dual.states[b])) ** 2
        if plane.parallel(a, b):
            within = max(within, f)
        else:
            cross = max(cross, abs(f - 1 / 3))
    cert.add("orthonormal within parallel classes", within, tol)
    cert.add("cross-class fidelity 1/3", cross, tol)
    rep = max(
        float(np.max(np.abs(probability.represent_pure(e, s) - p)))
        for s, p in zip(dual.states, dual.probabilities)
    )
    cert.add("MUB states represent as line vectors", rep, tol)
    inc = duality.sic_mub_incidence(e, dual)
    cert.require("each SIC state orthogonal to 4 MUB states", inc.counts[0] == 4)
    cert.require("each MUB state orthogonal to 3 SIC states", inc.counts[1] == 3)
    cert.require("incidence total 36", inc.total == 36)
    expected = np.array([[p in line for line in plane.lines] for p in plane.points])
    cert.require("orthogonality = point-line incidence", bool(np.array_equal(inc.matrix, expected)))
    fid_dev, rank_ok, cop = 0.0, True, 0.0
    for s in dual.states:
        t = duality.trine_extract(s, e)
        rank_ok &= t.span_rank == 2
        fid_dev = max(fid_dev, max(abs(f - 1 / 4) for f in t.fidelities))
        cop = max(cop, t.bloch_coplanarity())
        dots = [float(np.dot(a, b)) for a, b in itertools.combinations(t.bloch, 2)]
        fid_dev = max(fid_dev, max(abs(x + 0.5) for x in dots))
    cert.require("trines span rank 2", rank_ok)
    cert.add("trine fidelities 1/4 and Bloch angle 120 degrees", fid_dev, tol)
    cert.add("trine Bloch vectors coplanar", cop, tol)
    fid_dev, rank_ok = 0.0, True
    for s in e.vectors():
        q = duality.qubit_sic_from_dual(s, dual)
        rank_ok &= q.span_rank == 2
        fid_dev = max(fid_dev, max(abs(f - 1 / 3) for f in q.fidelities))
    cert.require("dual qubit SICs span rank 2", rank_ok)
    cert.add("dual qubit SIC fidelities 1/3", fid_dev, tol)
    zeros = {probability.count_zeros(p) for p in dual.probabilities}
    cert.require("MUB states saturate zero bound 3", zeros == {probability.max_zero_bound(3)})
    h_dev = max(abs(probability.shannon_entropy(p) - np.log2(6)) for p in dual.probabilities)
    cert.add("MUB state entropy log2 6", h_dev, tol)


def _twin_checks(cert: Certificate, tol: float) -> None:
    twin = duality.twin_incidence()
    cert.require("row-regularity = 28", set(twin.row_counts) == {28})
    cert.require("column-regularity = 28", set(twin.col_counts) == {28})
    cert.add("nonzero cross overlaps = 2/9", twin.nonzero_overlap_deviation(), tol)
    cert.add("zero cross overlaps vanish", twin.zero_overlap_max(), tol)
    anti = set(antisymmetric_labels())
    cert.require("antisymmetric label count = 28", len(anti) == 28)
    cert.require("fiducial zero set = antisymmetric labels", set(twin.fiducial_zero_labels()) == anti)
    transpose_ok = all(
        is_antisymmetric(lab) == transpose_antisymmetric(three_qubit_pauli(lab)) for lab in ALL_PAULI_LABELS
    )
    cert.require("antisymmetry formula = transpose test", transpose_ok)
    cert.require("GHZ sign identity", verify_ghz_identity() and not verify_ghz_identity(sign=1))
    t1 = duality.table1_patterns()
    cert.add("minus-state patterns binary", t1.max_rounding, 1e-8)
    cert.require("pattern rows have 36 ones", bool(np.all(t1.patterns.sum(1) == 36)))
    cert.require("reference rows aligned", t1.alignment is not None)
    minus = sic.hoggar_sic(-1)
    plus = sic.hoggar_sic(1)
    zeros = {probability.count_zeros(probability.represent_pure(plus, s)) for s in minus.states}
    cert.require("minus states saturate zero bound 28", zeros == {probability.max_zero_bound(8)})
    purity = max(
        abs(probability.purity_sum(probability.represent_pure(plus, s), 8)[0] - 1 / 36) for s in minus.states
    )
    cert.add("purity sum 1/36", purity, tol)


def _fano_checks(cert: Certificate) -> None:
    e = octonions.e
    cert.require("e1 e4 = e5", e(1) * e(4) == e(5))
    cert.require("e1 e1 = -1", e(1) * e(1) == -e(0))
    cert.require("e2 e1 = -e3", e(2) * e(1) == -e(3))
    imag = [(i, j) for i in range(1, 8) for j in range(1, 8) if i != j]
    cert.require("imaginary units anticommute", all(e(i) * e(j) == -(e(j) * e(i)) for i, j in imag))
    cert.require("imaginary units square to -1", all(e(i) * e(i) == -e(0) for i in range(1, 8)))
    cert.require("xor index law", all((e(i) * e(j)).index == i ^ j for i, j in imag))
    plane = octonions.fano_plane()
    for name, ok in octonions.fano_axioms(plane).items():
        cert.require(f"fano: {name}", ok)
    seven = octonions.fano_lines_r7()
    cert.require("7 incidence rows equiangular", not octonions.equiangular_defects(seven))
    cert.require(
        "incidence rows: norm^2 3, inner product 1",
        all(octonions.dot(v, v) == 3 for v in seven.vectors)
        and all(octonions.dot(u, v) == 1 for u, v in itertools.combinations(seven.vectors, 2)),
    )
    lines = octonions.antiflag_lines_28()
    expected = [(1, 1, 1), (-1, 1, -1), (-1, -1, 1), (1, -1, -1)]
    first = [octonions.antiflag_vector(0, p)[:3] for p in (4, 5, 6, 7)]
    cert.require("sign matrix for line (1,2,3)", first == expected)
    cert.require("28 anti-flag lines", len(lines) == 28 == realgeom.gerzon_bound(7, "real"))
    cert.require("anti-flag lines exactly equiangular at cosine 1/3", not octonions.equiangular_defects(lines))
    cert.require("anti-flag to antisymmetric Pauli bijection", octonions.antisymmetry_matches_antiflags())
    pair = octonions.hoggar_label_to_octonions(PauliLabel.from_xz(0b010, 0b101))
    cert.require("label (010,101) -> (e2, e5)", pair == (e(2), e(5)))
    pair = octonions.hoggar_label_to_octonions(PauliLabel.from_xz(0b000, 0b111))
    cert.require("label (000,111) -> (1, e7)", pair == (e(0), e(7)))


def _so8_checks(cert: Certificate) -> None:
    lines = octonions.so8_lines_28()
    cert.require("28 generator lines", len(lines) == 28 == realgeom.gerzon_bound(7, "real"))
    cert.require("base vector for point 1", lines.vectors[0] == (1, 1, 1, 0, 0, 0, 0))
    cert.require("flip (1,-1,1,0,0,0,0) present", (1, -1, 1, 0, 0, 0, 0) in lines.vectors)
    cert.require("generator lines exactly equiangular at cosine 1/3", not octonions.equiangular_defects(lines))


def _icosahedron_checks(cert: Certificate) -> None:
    x, z = realgeom.real_wh_ops()
    eye = realgeom.IDENTITY3
    cert.require("X^3 = I", realgeom.matpow(x, 3) == eye)
    cert.require("Z^2 = I", realgeom.matpow(z, 2) == eye)
    zx = realgeom.matmul(z, x)
    cert.require("(ZX)^3 = -I", realgeom.matpow(zx, 3) == realgeom.neg(eye))
    group = realgeom.tetrahedral_group()
    cert.require("tetrahedral group order 12", len(group) == 12)
    cert.require("group elements orthogonal, det 1", all(
        realgeom.matmul(g, realgeom.transpose(g)) == eye and realgeom.det3(g) == 1 for g in group
    ))
    mz = realgeom.neg(z)
    cert.require(
        "(-Z)^2 = X^3 = (-ZX)^3 = I",
        realgeom.matpow(mz, 2) == eye and realgeom.matpow(realgeom.matmul(mz, x), 3) == eye,
    )
    y = realgeom.golden_fiducial()
    cert.require("y^2 - y - 1 = 0", y * y - y - 1 == 0)
    lhs, rhs = realgeom.fiducial_overlap_condition(y)
    cert.require("<Zv,v> = <X^2 v,v>", lhs == rhs)
    cert.require("1/phi = phi - 1", PHI.inverse() == PHI - 1 and PHI * PHI.inverse() == 1)
    ico = realgeom.icosahedron_orbit()
    cert.require("orbit has 12 vectors", len(ico.orbit) == 12)
    cert.require("orbit equals (0,+-1,+-phi) and cyclic shifts", set(ico.orbit) == realgeom.icosahedron_expected())
    cert.require("6 line classes = gerzon(3, real)", len(ico) == 6 == realgeom.gerzon_bound(3, "real"))
    cross = {
        abs_g(octonions.dot(u, v))
        for u, v in itertools.combinations(ico.orbit, 2)
        if not all(a == -b for a, b in zip(u, v))
    }
    cert.require("cross-line inner products are +-phi", cross == {PHI})
    cert.require("exactly equiangular, cosine^2 = 1/5", not octonions.equiangular_defects(ico))


def abs_g(x: GoldenScalar) -> GoldenScalar:
    return -x if x < 0 else x


def _trine_checks(cert: Certificate, tol: float) -> None:
    vecs, lines = realgeom.trine_r2()
    cert.require("3 lines = gerzon(2, real)", len(vecs) == 3 == realgeom.gerzon_bound(2, "real"))
    cosdev = max(abs(abs(float(np.dot(a, b))) - 0.5) for a, b in itertools.combinations(vecs, 2))
    cert.add("pairwise |cos| = 1/2", cosdev, tol)
    frame = sum(np.outer(v, v) for v in vecs)
    cert.add("tight frame sum = (3/2) I", float(np.max(np.abs(frame - 1.5 * np.eye(2)))), tol)
    cert.add("cosine = welch_angle(2, real)", abs(realgeom.welch_angle(2, "real") - 0.5), tol)


def _bounds_checks(cert: Certificate, tol: float) -> None:
    g = realgeom.gerzon_bound
    z = probability.max_zero_bound
    cert.require("gerzon(7, real) = 28", g(7, "real") == 28)
    cert.require("gerzon(8, complex) = 64", g(8, "complex") == 64)
    cert.require("gerzon(3, octonionic3) = 27", g(3, "octonionic3") == 27)
    cert.require("gerzon(3, real) = 6", g(3, "real") == 6)
    cert.require("max zeros (2, complex) = 1", z(2, "complex") == 1)
    cert.require("max zeros (3, complex) = 3", z(3, "complex") == 3)
    cert.require("max zeros (8, complex) = 28", z(8, "complex") == 28)
    cert.require("max zeros (23, real) = 176", z(23, "real") == 176)
    cert.require("n_eff pure = 3, 6, 36", [probability.n_eff_pure(d) for d in (2, 3, 8)] == [3, 6, 36])
    cert.require(
        "d^2 - n_eff = C(d, 2)",
        all(d * d - probability.n_eff_pure(d) == d * (d - 1) // 2 for d in range(2, 65)),
    )
    fl = [probability.fibonacci_lucas_exact(k) for k in range(1, 6)]
    cert.require("fibonacci-lucas 4, 8, 19, 48, 124", fl == [4, 8, 19, 48, 124])
    cert.require("fibonacci-lucas sqrt5 residue zero", all(v.b == 0 for v in fl))
    w = realgeom.welch_angle
    dev = max(abs(w(3, "complex") - 0.5), abs(w(3, "real") ** 2 - 0.2), abs(w(7, "real") - 1 / 3))
    cert.add("welch angles", dev, tol)


def verify_family(family: str, tol: float = 1e-10) -> Certificate:
    """Build a family and run its full check suite."""
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}")
    cert = Certificate(family)
    if family in SIC_FAMILIES:
        cert.extend(sic.verify_sic(build_sic(family), tol).checks)
    if family in ("qubit-plus", "qubit-minus"):
        _qubit_checks(cert, 1 if family == "qubit-plus" else -1, tol)
    elif family == "hesse-coxeter":
        _hesse_coxeter_checks(cert, tol)
    elif family == "hesse-orbit":
        _hesse_orbit_checks(cert, tol)
    elif family in ("hoggar-plus", "hoggar-minus"):
        _hoggar_checks(cert, 1 if family == "hoggar-plus" else -1, tol)
    elif family == "mub-dual":
        _mub_checks(cert, tol)
    elif family == "twin-incidence":
        _twin_checks(cert, tol)
    elif family == "fano-28":
        _fano_checks(cert)
    elif family == "so8-28":
        _so8_checks(cert)
    elif family == "icosahedron":
        _icosahedron_checks(cert)
    elif family == "trine-r2":
        _trine_checks(cert, tol)
    elif family == "bounds":
        _bounds_checks(cert, tol)
    return cert
