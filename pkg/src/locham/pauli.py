"""Pauli strings, GF(2) symplectic linear algebra, and Clifford maps.

Pauli operators on qubits are stored in the symplectic (x|z) representation.
The canonical Hermitian word for bit vectors (x, z) is

    W(x, z) = i^{|x & z|} * prod_q X_q^{x_q} Z_q^{z_q},

so a general Pauli is i^phase * W(x, z) with phase in {0,1,2,3}.  Hermitian
Paulis have phase 0 (+) or 2 (-).

Clifford unitaries are represented by their conjugation action on the
generators X_q, Z_q (a symplectic map with signs), which supports exact
composition, application to Pauli strings, synthesis into elementary gates,
and dense materialization for small supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_PAULI_MATS = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}


class PauliString:
    """A Pauli operator i^phase * W(x, z) on a fixed number of qubits."""

    __slots__ = ("x", "z", "phase")

    def __init__(self, x, z, phase: int = 0):
        self.x = np.asarray(x, dtype=bool).copy()
        self.z = np.asarray(z, dtype=bool).copy()
        if self.x.shape != self.z.shape or self.x.ndim != 1:
            raise ValueError("x and z must be 1-d bit vectors of equal length")
        self.phase = int(phase) % 4

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(np.zeros(n, bool), np.zeros(n, bool), 0)

    @classmethod
    def from_label(cls, label: str, sign: int = 1) -> "PauliString":
        """Build from a string like 'XIZY'; sign is +1 or -1."""
        n = len(label)
        x = np.zeros(n, bool)
        z = np.zeros(n, bool)
        for q, ch in enumerate(label.upper()):
            if ch == "X":
                x[q] = True
            elif ch == "Z":
                z[q] = True
            elif ch == "Y":
                x[q] = z[q] = True
            elif ch != "I":
                raise ValueError(f"bad Pauli letter {ch!r}")
        return cls(x, z, 0 if sign == 1 else 2)

    @classmethod
    def single(cls, n: int, q: int, kind: str, sign: int = 1) -> "PauliString":
        x = np.zeros(n, bool)
        z = np.zeros(n, bool)
        if kind in ("X", "Y"):
            x[q] = True
        if kind in ("Z", "Y"):
            z[q] = True
        return cls(x, z, 0 if sign == 1 else 2)

    @classmethod
    def from_vec(cls, vec, sign: int = 1) -> "PauliString":
        """From a length-2n symplectic vector [x | z]."""
        vec = np.asarray(vec, dtype=bool)
        n = vec.size // 2
        return cls(vec[:n], vec[n:], 0 if sign == 1 else 2)

    # -- basic properties -----------------------------------------------

    @property
    def n(self) -> int:
        return self.x.size

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    @property
    def sign(self) -> int:
        if not self.is_hermitian:
            raise ValueError("Pauli has imaginary phase; no +-1 sign")
        return 1 if self.phase == 0 else -1

    def with_sign(self, sign: int) -> "PauliString":
        return PauliString(self.x, self.z, 0 if sign == 1 else 2)

    def vec(self) -> np.ndarray:
        """Symplectic vector [x | z] over GF(2)."""
        return np.concatenate([self.x, self.z]).astype(np.uint8)

    def is_identity_bits(self) -> bool:
        return not (self.x.any() or self.z.any())

    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def support(self) -> list:
        return [int(q) for q in np.nonzero(self.x | self.z)[0]]

    def label(self) -> str:
        out = []
        for q in range(self.n):
            if self.x[q] and self.z[q]:
                out.append("Y")
            elif self.x[q]:
                out.append("X")
            elif self.z[q]:
                out.append("Z")
            else:
                out.append("I")
        return "".join(out)

    def __repr__(self):
        pre = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase]
        return f"{pre}{self.label()}"

    def __eq__(self, other):
        return (
            isinstance(other, PauliString)
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def key(self):
        """Hashable key ignoring phase (the group element mod phase)."""
        return (self.x.tobytes(), self.z.tobytes())

    # -- algebra ----------------------------------------------------------

    def commutes(self, other: "PauliString") -> bool:
        return not symplectic_product(self.vec(), other.vec())

    def mul(self, other: "PauliString") -> "PauliString":
        """Operator product self * other with exact phase tracking."""
        ya = int(np.count_nonzero(self.x & self.z))
        yb = int(np.count_nonzero(other.x & other.z))
        x = self.x ^ other.x
        z = self.z ^ other.z
        yc = int(np.count_nonzero(x & z))
        cross = int(np.count_nonzero(self.z & other.x))
        phase = (self.phase + other.phase + ya + yb - yc + 2 * cross) % 4
        return PauliString(x, z, phase)

    def adjoint(self) -> "PauliString":
        return PauliString(self.x, self.z, (-self.phase) % 4)

    def restrict(self, qubits) -> "PauliString":
        """Restriction to an ordered list of qubit indices (keeps phase)."""
        idx = np.asarray(qubits, dtype=int)
        return PauliString(self.x[idx], self.z[idx], self.phase)

    def embed(self, n: int, positions) -> "PauliString":
        """Embed into n qubits, placing qubit q at positions[q]."""
        x = np.zeros(n, bool)
        z = np.zeros(n, bool)
        pos = np.asarray(positions, dtype=int)
        x[pos] = self.x
        z[pos] = self.z
        return PauliString(x, z, self.phase)

    def to_matrix(self) -> np.ndarray:
        """Dense matrix; exponential in qubit count."""
        out = np.array([[1.0 + 0j]])
        for q in range(self.n):
            if self.x[q] and self.z[q]:
                m = _Y
            elif self.x[q]:
                m = _X
            elif self.z[q]:
                m = _Z
            else:
                m = _I2
            out = np.kron(out, m)
        return (1j ** self.phase) * out


# ---------------------------------------------------------------------------
# GF(2) linear algebra
# ---------------------------------------------------------------------------


def gf2_rref(a: np.ndarray):
    """Reduced row echelon form over GF(2).

    Returns (rref, pivot_columns, transform) with transform @ a = rref
    (mod 2); transform records the row operations.
    """
    a = np.array(a, dtype=np.uint8, copy=True) % 2
    rows, cols = a.shape
    t = np.eye(rows, dtype=np.uint8)
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        sel = np.nonzero(a[r:, c])[0]
        if sel.size == 0:
            continue
        p = r + sel[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
            t[[r, p]] = t[[p, r]]
        hit = np.nonzero(a[:, c])[0]
        hit = hit[hit != r]
        a[hit] ^= a[r]
        t[hit] ^= t[r]
        pivots.append(c)
        r += 1
    return a, pivots, t


def gf2_rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    _, pivots, _ = gf2_rref(a)
    return len(pivots)


def gf2_solve(a: np.ndarray, b: np.ndarray):
    """One solution x of a @ x = b over GF(2), or None."""
    a = np.atleast_2d(np.asarray(a, dtype=np.uint8))
    b = np.asarray(b, dtype=np.uint8) % 2
    rows, cols = a.shape
    aug = np.concatenate([a % 2, b.reshape(-1, 1)], axis=1)
    r, pivots, _ = gf2_rref(aug)
    x = np.zeros(cols, dtype=np.uint8)
    for i, c in enumerate(pivots):
        if c == cols:
            return None  # pivot in augmented column: inconsistent
        x[c] = r[i, cols]
    return x


def gf2_nullspace(a: np.ndarray) -> np.ndarray:
    """Rows span the kernel of a (as row vectors x with a @ x = 0)."""
    a = np.atleast_2d(np.asarray(a, dtype=np.uint8)) % 2
    rows, cols = a.shape
    r, pivots, _ = gf2_rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.uint8)
        v[f] = 1
        for i, c in enumerate(pivots):
            if r[i, f]:
                v[c] = 1
        basis.append(v)
    if not basis:
        return np.zeros((0, cols), dtype=np.uint8)
    return np.array(basis, dtype=np.uint8)


def gf2_row_basis(a: np.ndarray) -> np.ndarray:
    """Rows forming a basis of the row space of a."""
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0), dtype=np.uint8)
    r, pivots, _ = gf2_rref(a)
    return r[: len(pivots)]


def gf2_in_span(rows: np.ndarray, v: np.ndarray) -> bool:
    if rows.size == 0:
        return not np.asarray(v, dtype=np.uint8).any()
    return gf2_solve(rows.T % 2, v) is not None


# ---------------------------------------------------------------------------
# Symplectic structure
# ---------------------------------------------------------------------------


def symplectic_product(u: np.ndarray, v: np.ndarray) -> int:
    """Binary symplectic form on [x|z] vectors; 1 means anticommute."""
    u = np.asarray(u, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    n = u.size // 2
    return int(np.dot(u[:n], v[n:]) + np.dot(u[n:], v[:n])) % 2


def symplectic_gram_matrix(rows: np.ndarray) -> np.ndarray:
    rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
    m, two_n = rows.shape
    n = two_n // 2
    lam = np.zeros((two_n, two_n), dtype=np.uint8)
    lam[:n, n:] = np.eye(n, dtype=np.uint8)
    lam[n:, :n] = np.eye(n, dtype=np.uint8)
    return (rows @ lam @ rows.T) % 2


def symplectic_gram_schmidt(gens: np.ndarray):
    """Split span(gens) into hyperbolic pairs and a radical basis.

    Returns (pairs, radical): pairs is a list of (a, b) vectors with
    w(a,b)=1, all pairs mutually orthogonal; radical is a basis of
    span that is orthogonal to everything in span.
    """
    basis = [v.copy() for v in gf2_row_basis(np.atleast_2d(gens))]
    pairs = []
    radical = []
    while basis:
        a = basis.pop(0)
        partner = None
        for i, b in enumerate(basis):
            if symplectic_product(a, b):
                partner = i
                break
        if partner is None:
            radical.append(a)
            continue
        b = basis.pop(partner)
        rest = []
        for u in basis:
            u = u.copy()
            if symplectic_product(u, b):
                u ^= a
            if symplectic_product(u, a):
                u ^= b
            if u.any():
                rest.append(u)
        basis = [v.copy() for v in gf2_row_basis(np.array(rest))] if rest else []
        pairs.append((a, b))
    return pairs, radical


def symplectic_complete(pairs, isotropic, n: int):
    """Complete a partial symplectic structure to a full basis of GF(2)^{2n}.

    pairs: existing hyperbolic pairs; isotropic: vectors needing partners
    (mutually orthogonal and orthogonal to the pairs).  Returns
    (all_pairs) of length n, where the first len(pairs) are the input
    pairs and the next len(isotropic) have the isotropic vectors first.
    """
    pairs = [(a.astype(np.uint8), b.astype(np.uint8)) for a, b in pairs]
    iso = [c.astype(np.uint8) for c in isotropic]
    out = list(pairs)
    remaining = list(iso)
    while remaining:
        c = remaining.pop(0)
        # Constraints: w(c, v) = 1; w(p, v) = 0 for members of existing
        # pairs and the other isotropic vectors.
        cons = [c]
        rhs = [1]
        for a, b in out:
            cons.extend([a, b])
            rhs.extend([0, 0])
        for other in remaining:
            cons.append(other)
            rhs.append(0)
        lam_rows = np.array([_lam_vec(v) for v in cons], dtype=np.uint8)
        sol = gf2_solve(lam_rows, np.array(rhs, dtype=np.uint8))
        if sol is None:
            raise ValueError("cannot complete symplectic basis")
        out.append((c, sol.astype(np.uint8)))
    # Fill the orthogonal complement with standard vectors.
    two_n = 2 * n
    while len(out) < n:
        v = None
        for k in range(two_n):
            cand = np.zeros(two_n, dtype=np.uint8)
            cand[k] = 1
            for a, b in out:
                if symplectic_product(cand, b):
                    cand ^= a
                if symplectic_product(cand, a):
                    cand ^= b
            if cand.any():
                v = cand
                break
        if v is None:
            raise ValueError("symplectic completion exhausted")
        # find partner of v inside the complement
        cons = [v]
        rhs = [1]
        for a, b in out:
            cons.extend([a, b])
            rhs.extend([0, 0])
        lam_rows = np.array([_lam_vec(u) for u in cons], dtype=np.uint8)
        w = gf2_solve(lam_rows, np.array(rhs, dtype=np.uint8))
        if w is None:
            raise ValueError("cannot partner complement vector")
        out.append((v, w.astype(np.uint8)))
    return out


def _lam_vec(v: np.ndarray) -> np.ndarray:
    """Row u -> the linear functional w(v, .) as a GF(2) row."""
    v = np.asarray(v, dtype=np.uint8)
    n = v.size // 2
    return np.concatenate([v[n:], v[:n]])


# ---------------------------------------------------------------------------
# Clifford maps
# ---------------------------------------------------------------------------


@dataclass
class CliffordMap:
    """Conjugation action of a Clifford unitary on n qubits.

    image_x[q] and image_z[q] are the Hermitian Paulis U X_q U^dag and
    U Z_q U^dag.
    """

    image_x: list
    image_z: list

    @property
    def n(self) -> int:
        return len(self.image_x)

    @classmethod
    def identity(cls, n: int) -> "CliffordMap":
        return cls(
            [PauliString.single(n, q, "X") for q in range(n)],
            [PauliString.single(n, q, "Z") for q in range(n)],
        )

    def validate(self) -> None:
        n = self.n
        for p in self.image_x + self.image_z:
            if not p.is_hermitian:
                raise ValueError("Clifford images must be Hermitian Paulis")
        for q in range(n):
            if not symplectic_product(self.image_x[q].vec(), self.image_z[q].vec()):
                raise ValueError(f"images of X_{q}, Z_{q} must anticommute")
        vecs = [p.vec() for p in self.image_x] + [p.vec() for p in self.image_z]
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                want = 1 if abs(i - j) == n else 0
                if symplectic_product(vecs[i], vecs[j]) != want:
                    raise ValueError("image commutation table is not symplectic")

    def apply(self, p: PauliString) -> PauliString:
        """U p U^dag."""
        if p.n != self.n:
            raise ValueError("qubit count mismatch")
        # P = i^phase * i^{|x&z|} * prod_q X_q^{x_q} Z_q^{z_q}; conjugate
        # each generator factor and multiply (mul keeps canonical form).
        y = int(np.count_nonzero(p.x & p.z))
        acc = PauliString.identity(self.n)
        acc.phase = (p.phase + y) % 4
        for q in range(self.n):
            if p.x[q]:
                acc = acc.mul(self.image_x[q])
            if p.z[q]:
                acc = acc.mul(self.image_z[q])
        return acc

    def compose(self, first: "CliffordMap") -> "CliffordMap":
        """Map equal to applying `first`, then self (self o first)."""
        return CliffordMap(
            [self.apply(p) for p in first.image_x],
            [self.apply(p) for p in first.image_z],
        )

    def inverse(self) -> "CliffordMap":
        n = self.n
        m = np.zeros((2 * n, 2 * n), dtype=np.uint8)
        for q in range(n):
            m[:, q] = self.image_x[q].vec()
            m[:, n + q] = self.image_z[q].vec()
        # invert the symplectic matrix over GF(2)
        aug = np.concatenate([m, np.eye(2 * n, dtype=np.uint8)], axis=1)
        r, pivots, _ = gf2_rref(aug)
        if pivots != list(range(2 * n)):
            raise ValueError("singular symplectic matrix")
        m_inv = r[:, 2 * n:]
        img_x = [PauliString.from_vec(m_inv[:, q]) for q in range(n)]
        img_z = [PauliString.from_vec(m_inv[:, n + q]) for q in range(n)]
        inv = CliffordMap(img_x, img_z)
        # fix signs so that self(inv(P)) = P for generators
        for q in range(n):
            if self.apply(inv.image_x[q]).sign != 1:
                inv.image_x[q] = inv.image_x[q].with_sign(-1)
            if self.apply(inv.image_z[q]).sign != 1:
                inv.image_z[q] = inv.image_z[q].with_sign(-1)
        return inv

    # -- elementary gates -------------------------------------------------

    @classmethod
    def gate(cls, n: int, name: str, *qubits) -> "CliffordMap":
        c = cls.identity(n)
        if name == "H":
            (q,) = qubits
            c.image_x[q] = PauliString.single(n, q, "Z")
            c.image_z[q] = PauliString.single(n, q, "X")
        elif name == "S":
            (q,) = qubits
            c.image_x[q] = PauliString.single(n, q, "Y")
        elif name == "SDG":
            (q,) = qubits
            c.image_x[q] = PauliString.single(n, q, "Y", sign=-1)
        elif name == "X":
            (q,) = qubits
            c.image_z[q] = PauliString.single(n, q, "Z", sign=-1)
        elif name == "Z":
            (q,) = qubits
            c.image_x[q] = PauliString.single(n, q, "X", sign=-1)
        elif name == "CNOT":
            a, b = qubits
            px = PauliString.identity(n)
            px.x[a] = px.x[b] = True
            c.image_x[a] = px
            pz = PauliString.identity(n)
            pz.z[a] = pz.z[b] = True
            c.image_z[b] = pz
        elif name == "CZ":
            a, b = qubits
            pa = PauliString.identity(n)
            pa.x[a] = True
            pa.z[b] = True
            c.image_x[a] = pa
            pb = PauliString.identity(n)
            pb.x[b] = True
            pb.z[a] = True
            c.image_x[b] = pb
        elif name == "SWAP":
            a, b = qubits
            c.image_x[a] = PauliString.single(n, b, "X")
            c.image_x[b] = PauliString.single(n, a, "X")
            c.image_z[a] = PauliString.single(n, b, "Z")
            c.image_z[b] = PauliString.single(n, a, "Z")
        else:
            raise ValueError(f"unknown gate {name}")
        return c

    @classmethod
    def from_gate_list(cls, n: int, gates) -> "CliffordMap":
        c = cls.identity(n)
        for g in gates:
            c = cls.gate(n, g[0], *g[1:]).compose(c)
        return c

    # -- synthesis --------------------------------------------------------

    def to_gates(self) -> list:
        """Elementary gate list ('name', qubits...) implementing the map.

        Gates apply left to right: composing them in order reproduces
        the conjugation action exactly, including signs.
        """
        n = self.n
        work = CliffordMap(list(self.image_x), list(self.image_z))
        prefix = []  # gates applied after `work` to reduce it to identity

        def push(name, *qs):
            g = CliffordMap.gate(n, name, *qs)
            nonlocal work
            work = g.compose(work)
            prefix.append((name,) + qs)

        for q in range(n):
            # reduce image of Z_q to +Z_q
            w = work.image_z[q]
            if not w.z[q:].any():
                j = q + int(np.nonzero(w.x[q:])[0][0])
                push("H", j)
                w = work.image_z[q]
            j = q + int(np.nonzero(w.z[q:])[0][0])
            if j != q:
                push("SWAP", q, j)
                w = work.image_z[q]
            if w.x[q]:
                # Y at the pivot: S sends Y -> -X, H then sends X -> Z.
                push("S", q)
                push("H", q)
                w = work.image_z[q]
                if w.x[q] or not w.z[q]:
                    raise AssertionError("pivot reduction to Z failed")
            for j in range(q + 1, n):
                w = work.image_z[q]
                if w.x[j] and w.z[j]:
                    push("S", j)
                w = work.image_z[q]
                if w.x[j]:
                    push("H", j)
            for j in range(q + 1, n):
                w = work.image_z[q]
                if w.z[j]:
                    push("CNOT", j, q)
            w = work.image_z[q]
            if w.sign == -1:
                push("X", q)
            w = work.image_z[q]
            assert w == PauliString.single(n, q, "Z"), "Z reduction failed"

            # reduce image of X_q to +X_q with gates preserving Z_q
            v = work.image_x[q]
            assert v.x[q], "symplectic structure lost"
            for j in range(q + 1, n):
                v = work.image_x[q]
                if v.x[j]:
                    push("CNOT", q, j)
            for j in range(q + 1, n):
                v = work.image_x[q]
                if v.z[j]:
                    push("CZ", q, j)
            v = work.image_x[q]
            if v.z[q]:
                push("S", q)
            v = work.image_x[q]
            if v.sign == -1:
                push("Z", q)
            v = work.image_x[q]
            assert v == PauliString.single(n, q, "X"), "X reduction failed"
            assert work.image_z[q] == PauliString.single(n, q, "Z")

        # prefix o self = identity, so self = inverse of the prefix chain.
        inv_gates = []
        for name, *qs in reversed(prefix):
            if name == "S":
                inv_gates.append(("SDG",) + tuple(qs))
            elif name == "SDG":
                inv_gates.append(("S",) + tuple(qs))
            else:
                inv_gates.append((name,) + tuple(qs))
        return inv_gates

    def to_unitary(self) -> np.ndarray:
        """Dense unitary (2^n x 2^n); phase fixed by first nonzero entry."""
        mats = {
            "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
            "S": np.diag([1, 1j]).astype(complex),
            "SDG": np.diag([1, -1j]).astype(complex),
            "X": _X,
            "Z": _Z,
        }
        n = self.n
        u = np.eye(2 ** n, dtype=complex)
        for g in self.to_gates():
            name = g[0]
            if name in mats:
                u = _embed_unitary(mats[name], [g[1]], n) @ u
            elif name == "CNOT":
                m = np.eye(4, dtype=complex)[([0, 1, 3, 2])]
                u = _embed_unitary(m, [g[1], g[2]], n) @ u
            elif name == "CZ":
                m = np.diag([1, 1, 1, -1]).astype(complex)
                u = _embed_unitary(m, [g[1], g[2]], n) @ u
            elif name == "SWAP":
                m = np.eye(4, dtype=complex)[([0, 2, 1, 3])]
                u = _embed_unitary(m, [g[1], g[2]], n) @ u
            else:
                raise ValueError(name)
        return u

    @classmethod
    def from_unitary(cls, u: np.ndarray, atol: float = 1e-9) -> "CliffordMap":
        """Extract the Clifford action of a dense unitary, or raise."""
        dim = u.shape[0]
        n = int(round(np.log2(dim)))
        if 2 ** n != dim:
            raise ValueError("unitary dimension is not a power of 2")
        img_x, img_z = [], []
        for q in range(n):
            for kind, target in (("X", img_x), ("Z", img_z)):
                p = PauliString.single(n, q, kind)
                m = u @ p.to_matrix() @ u.conj().T
                target.append(_match_pauli(m, n, atol))
        c = cls(img_x, img_z)
        c.validate()
        return c


def _match_pauli(m: np.ndarray, n: int, atol: float) -> PauliString:
    """Match a dense matrix to +-W(x,z), or raise ValueError."""
    # Identify bit pattern from the action on basis states: column 0
    # determines x (the row index hit), phases determine z.
    col = m[:, 0]
    nz = np.nonzero(np.abs(col) > 0.5)[0]
    if nz.size != 1:
        raise ValueError("not a Pauli (column structure)")
    xmask = int(nz[0])
    x = np.array([(xmask >> (n - 1 - q)) & 1 for q in range(n)], dtype=bool)
    z = np.zeros(n, bool)
    for q in range(n):
        basis = 1 << (n - 1 - q)
        colq = m[:, basis]
        nzq = np.nonzero(np.abs(colq) > 0.5)[0]
        if nzq.size != 1 or int(nzq[0]) != (basis ^ xmask):
            raise ValueError("not a Pauli (shift structure)")
        ratio = colq[nzq[0]] / col[nz[0]]
        if abs(ratio - 1) < 0.5:
            z[q] = False
        elif abs(ratio + 1) < 0.5:
            z[q] = True
        else:
            raise ValueError("not a Pauli (phase structure)")
    for sign in (1, -1):
        cand = PauliString(x, z, 0 if sign == 1 else 2)
        if np.allclose(cand.to_matrix(), m, atol=atol):
            return cand
    raise ValueError("matrix is Pauli-like but phases are not +-1")


def _embed_unitary(gate: np.ndarray, qubits, n: int) -> np.ndarray:
    """Embed a small unitary acting on the given qubits into n qubits."""
    k = len(qubits)
    dim = 2 ** n
    u = np.zeros((dim, dim), dtype=complex)
    rest = [q for q in range(n) if q not in qubits]
    for basis in range(dim):
        bits = [(basis >> (n - 1 - q)) & 1 for q in range(n)]
        sub = 0
        for q in qubits:
            sub = (sub << 1) | bits[q]
        for sub_out in range(2 ** k):
            amp = gate[sub_out, sub]
            if amp == 0:
                continue
            bits_out = list(bits)
            for i, q in enumerate(qubits):
                bits_out[q] = (sub_out >> (k - 1 - i)) & 1
            idx = 0
            for b in bits_out:
                idx = (idx << 1) | b
            u[idx, basis] += amp
    return u


# ---------------------------------------------------------------------------
# Stabilizer groups
# ---------------------------------------------------------------------------


def group_contains(generators, p: PauliString):
    """Decide membership of p in the group generated by Hermitian Paulis.

    Returns +1 / -1 if p (up to that sign) is a product of the
    generators, or None if the bit pattern is outside the group.
    Ignores p's own sign: the returned sign s satisfies
    product = s * p.with_sign(+1).
    """
    if not generators:
        return 1 if p.is_identity_bits() else None
    mat = np.array([g.vec() for g in generators], dtype=np.uint8)
    sol = gf2_solve(mat.T, p.vec())
    if sol is None:
        return None
    acc = PauliString.identity(p.n)
    for i, bit in enumerate(sol):
        if bit:
            acc = acc.mul(generators[i])
    if not acc.is_hermitian:
        raise AssertionError("product of commuting Hermitian Paulis not Hermitian")
    return acc.sign


def independent_generators(paulis):
    """Subset of the input whose symplectic vectors are independent."""
    out = []
    mat = None
    for p in paulis:
        v = p.vec().reshape(1, -1)
        if mat is None:
            if v.any():
                out.append(p)
                mat = v
            continue
        if gf2_rank(np.vstack([mat, v])) > gf2_rank(mat):
            out.append(p)
            mat = np.vstack([mat, v])
    return out
