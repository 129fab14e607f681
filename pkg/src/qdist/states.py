"""Density matrices, pure states, the qubit Bloch parametrization and samplers."""
from dataclasses import dataclass, field

import numpy as np

from .errors import BlochNormExceeded, DimensionMismatch, InvalidState, NotHermitian
from .linalg import PAULIS, check_hermitian, dagger, eigvalsh_desc

TRACE_TOL = 1e-9
PSD_TOL = 1e-10
NORM_TOL = 1e-10
PURITY_TOL = 1e-9
BLOCH_TOL = 1e-12


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix (Hermitian, PSD, unit trace).

    Validation happens once, at construction.
    """

    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.array(self.mat, dtype=complex)
        try:
            check_hermitian(m)
        except NotHermitian as exc:
            raise InvalidState(f"density matrix must be Hermitian ({exc})") from exc
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"density matrix must have unit trace, got {tr:.12g}")
        lo = eigvalsh_desc(m)[-1]
        if lo < -PSD_TOL:
            raise InvalidState(
                f"density matrix must be positive semidefinite, min eigenvalue {lo:.3e}")
        m = 0.5 * (m + dagger(m))
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self):
        return self.mat.shape[0]

    def purity(self):
        return float(np.real(np.trace(self.mat @ self.mat)))

    def is_pure(self):
        return self.purity() >= 1.0 - PURITY_TOL

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)


@dataclass(frozen=True)
class PureState:
    vec: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.vec, dtype=complex).reshape(-1)
        nrm = np.linalg.norm(v)
        if abs(nrm - 1.0) > NORM_TOL:
            raise InvalidState(f"pure state must have unit norm, got {nrm:.12g}")
        v.setflags(write=False)
        object.__setattr__(self, "vec", v)

    @property
    def dim(self):
        return self.vec.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.vec if dtype is None else self.vec.astype(dtype)


@dataclass(frozen=True)
class BlochVector:
    r: np.ndarray

    def __post_init__(self):
        r = np.array(self.r, dtype=float).reshape(-1)
        if r.shape != (3,):
            raise DimensionMismatch(f"Bloch vector needs 3 components, got {r.shape[0]}")
        nrm = np.linalg.norm(r)
        if nrm > 1.0 + BLOCH_TOL:
            raise BlochNormExceeded(f"Bloch vector norm {nrm:.12g} exceeds 1")
        r.setflags(write=False)
        object.__setattr__(self, "r", r)

    @property
    def norm(self):
        return float(np.linalg.norm(self.r))

    def __array__(self, dtype=None, copy=None):
        return self.r if dtype is None else self.r.astype(dtype)


def as_matrix(state):
    """Return the operator of a DensityMatrix, PureState or raw array."""
    if isinstance(state, DensityMatrix):
        return state.mat
    if isinstance(state, PureState):
        return np.outer(state.vec, np.conj(state.vec))
    return np.asarray(state)


def as_vector(state):
    if isinstance(state, PureState):
        return state.vec
    return np.asarray(state).reshape(-1)


def from_bloch(r):
    """Qubit density matrix (I + r.sigma)/2."""
    if not isinstance(r, BlochVector):
        r = BlochVector(r)
    m = 0.5 * (np.eye(2, dtype=complex) + sum(ri * s for ri, s in zip(r.r, PAULIS)))
    return DensityMatrix(m)


def to_bloch(rho):
    m = as_matrix(rho)
    if m.shape != (2, 2):
        raise DimensionMismatch(f"Bloch vectors exist only for qubits, got dim {m.shape[0]}")
    r = np.array([np.real(np.trace(m @ s)) for s in PAULIS])
    nrm = np.linalg.norm(r)
    if 1.0 < nrm <= 1.0 + 1e-9:
        r = r / nrm
    return BlochVector(r)


def projector(psi):
    """|psi><psi| as a DensityMatrix."""
    v = as_vector(psi)
    return DensityMatrix(np.outer(v, np.conj(v)))


def ket(*amps):
    return PureState(np.asarray(amps, dtype=complex))


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_pure(d, seed=None):
    """Haar-random pure state: normalized vector of i.i.d. complex Gaussians."""
    rng = _rng(seed)
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureState(z / np.linalg.norm(z))


def random_density(d, seed=None):
    """Random density matrix from the Hilbert-Schmidt measure, G G^H / Tr(G G^H)."""
    rng = _rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ dagger(g)
    return DensityMatrix(m / np.trace(m).real)


def random_unitary(d, seed=None):
    """Haar-random unitary via QR with the phase of R's diagonal removed."""
    rng = _rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_bloch(seed=None, norm=None):
    """Random Bloch vector, uniform in the ball, or on the sphere of radius ``norm``."""
    rng = _rng(seed)
    u = rng.standard_normal(3)
    u /= np.linalg.norm(u)
    if norm is None:
        norm = rng.random() ** (1.0 / 3.0)
    return BlochVector(norm * u)


def random_rotation(seed=None):
    """Haar-random element of SO(3)."""
    rng = _rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


# ---------------------------------------------------------------- text format

def _parse_complex(tok):
    t = tok.strip().replace("I", "i")
    if t.endswith("i"):
        t = t[:-1] + "j"
        if t in ("j", "+j", "-j"):
            t = t.replace("j", "1j")
    return complex(t)


def parse_state(text):
    """Parse the state text format.

    Either a single line ``bloch x y z`` or a ``dim n`` header followed by ``n``
    rows of ``n`` whitespace-separated complex entries written ``a+bi``.
    Blank lines and ``#`` comments are ignored.

    Raises:
        InvalidState: on malformed input or when the matrix is not a valid
            density matrix.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidState("empty state description")
    head = lines[0].split()
    key = head[0].lower()
    if key == "bloch":
        if len(head) != 4 or len(lines) != 1:
            raise InvalidState("expected a single line 'bloch x y z'")
        try:
            r = [float(x) for x in head[1:]]
        except ValueError as exc:
            raise InvalidState(f"bad Bloch component: {exc}") from exc
        return from_bloch(r)
    if key == "dim":
        try:
            n = int(head[1])
        except (IndexError, ValueError) as exc:
            raise InvalidState("expected 'dim n' header") from exc
        rows = lines[1:]
        if len(rows) != n:
            raise InvalidState(f"expected {n} matrix rows, found {len(rows)}")
        m = np.zeros((n, n), dtype=complex)
        for i, row in enumerate(rows):
            toks = row.split()
            if len(toks) != n:
                raise InvalidState(f"row {i + 1} has {len(toks)} entries, expected {n}")
            try:
                m[i] = [_parse_complex(t) for t in toks]
            except ValueError as exc:
                raise InvalidState(f"row {i + 1}: cannot parse complex entry ({exc})") from exc
        return DensityMatrix(m)
    raise InvalidState(f"unknown state header {head[0]!r}; expected 'dim' or 'bloch'")


def format_state(rho, digits=17):
    m = as_matrix(rho)
    out = [f"dim {m.shape[0]}"]
    for row in m:
        out.append(" ".join(f"{z.real:.{digits}g}{z.imag:+.{digits}g}i" for z in row))
    return "\n".join(out) + "\n"


def load_state(path):
    with open(path) as fh:
        return parse_state(fh.read())
