import numpy as np
import pytest

from locham.pauli import (
    CliffordMap,
    PauliString,
    gf2_nullspace,
    gf2_rank,
    gf2_solve,
    group_contains,
    independent_generators,
    symplectic_complete,
    symplectic_gram_schmidt,
    symplectic_product,
)

rng = np.random.default_rng(20240811)


def random_pauli(n, with_phase=False):
    x = rng.integers(0, 2, n).astype(bool)
    z = rng.integers(0, 2, n).astype(bool)
    phase = int(rng.integers(0, 4)) if with_phase else int(rng.integers(0, 2)) * 2
    return PauliString(x, z, phase)


def test_label_roundtrip():
    p = PauliString.from_label("XYZI", sign=-1)
    assert p.label() == "XYZI"
    assert p.sign == -1
    assert p.weight() == 3
    assert p.support() == [0, 1, 2]


def test_single_qubit_matrices():
    assert np.allclose(PauliString.from_label("Y").to_matrix(), np.array([[0, -1j], [1j, 0]]))
    assert np.allclose(PauliString.from_label("Z", sign=-1).to_matrix(), np.diag([-1, 1]))


def test_mul_matches_dense():
    for _ in range(60):
        n = int(rng.integers(1, 5))
        a, b = random_pauli(n, True), random_pauli(n, True)
        prod = a.mul(b)
        assert np.allclose(prod.to_matrix(), a.to_matrix() @ b.to_matrix(), atol=1e-12)


def test_commutes_matches_dense():
    for _ in range(40):
        n = int(rng.integers(1, 5))
        a, b = random_pauli(n), random_pauli(n)
        comm = a.to_matrix() @ b.to_matrix() - b.to_matrix() @ a.to_matrix()
        assert a.commutes(b) == np.allclose(comm, 0, atol=1e-12)


def test_hermitian_product_of_commuting_pair():
    a = PauliString.from_label("XX")
    b = PauliString.from_label("ZZ")
    prod = a.mul(b)
    assert prod.is_hermitian
    assert np.allclose(prod.to_matrix(), a.to_matrix() @ b.to_matrix())


def test_gf2_solve_and_nullspace():
    a = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    x = gf2_solve(a, np.array([1, 0], dtype=np.uint8))
    assert x is not None and np.array_equal(a @ x % 2, [1, 0])
    ns = gf2_nullspace(a)
    assert ns.shape[0] == 1
    assert not (a @ ns[0] % 2).any()
    assert gf2_rank(a) == 2


def test_symplectic_gram_schmidt_pairs():
    for _ in range(20):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(1, 2 * n))
        gens = rng.integers(0, 2, (m, 2 * n)).astype(np.uint8)
        pairs, radical = symplectic_gram_schmidt(gens)
        vecs = [v for ab in pairs for v in ab] + radical
        assert gf2_rank(np.array(vecs)) == len(vecs) if vecs else True
        for a, b in pairs:
            assert symplectic_product(a, b) == 1
        for i, (a, b) in enumerate(pairs):
            for c in radical:
                assert symplectic_product(a, c) == 0
                assert symplectic_product(b, c) == 0
            for a2, b2 in pairs[i + 1:]:
                assert symplectic_product(a, a2) == 0
                assert symplectic_product(a, b2) == 0
                assert symplectic_product(b, a2) == 0
                assert symplectic_product(b, b2) == 0
        for c in radical:
            for c2 in radical:
                assert symplectic_product(c, c2) == 0


def test_symplectic_complete_full_basis():
    n = 4
    gens = np.array(
        [PauliString.from_label("XXII").vec(), PauliString.from_label("ZZII").vec()]
    )
    pairs, radical = symplectic_gram_schmidt(gens)
    full = symplectic_complete(pairs, radical, n)
    assert len(full) == n
    flat = [v for ab in full for v in ab]
    assert gf2_rank(np.array(flat)) == 2 * n
    for i, (a, b) in enumerate(full):
        assert symplectic_product(a, b) == 1
        for j, (a2, b2) in enumerate(full):
            if i != j:
                assert symplectic_product(a, a2) == 0
                assert symplectic_product(b, b2) == 0
                assert symplectic_product(a, b2) == 0


def test_clifford_gate_actions_match_dense():
    cases = [
        ("H", (0,), 1),
        ("S", (0,), 1),
        ("SDG", (0,), 1),
        ("X", (0,), 1),
        ("Z", (0,), 1),
        ("CNOT", (0, 1), 2),
        ("CZ", (0, 1), 2),
        ("SWAP", (0, 1), 2),
    ]
    for name, qs, n in cases:
        c = CliffordMap.gate(n, name, *qs)
        c.validate()
        u = c.to_unitary()
        for q in range(n):
            for kind in ("X", "Z"):
                p = PauliString.single(n, q, kind)
                img = c.apply(p)
                assert np.allclose(
                    u @ p.to_matrix() @ u.conj().T, img.to_matrix(), atol=1e-12
                ), (name, q, kind)


def random_clifford(n, n_gates=30):
    one_q = ["H", "S", "X", "Z"]
    two_q = ["CNOT", "CZ", "SWAP"]
    gates = []
    for _ in range(n_gates):
        kind = rng.choice(one_q + two_q) if n >= 2 else rng.choice(one_q)
        if kind in one_q:
            gates.append((kind, int(rng.integers(0, n))))
        else:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append((kind, int(a), int(b)))
    return CliffordMap.from_gate_list(n, gates)


def test_random_clifford_synthesis_roundtrip():
    for _ in range(25):
        n = int(rng.integers(1, 5))
        c = random_clifford(n)
        c.validate()
        rebuilt = CliffordMap.from_gate_list(n, c.to_gates())
        for q in range(n):
            assert rebuilt.image_x[q] == c.image_x[q]
            assert rebuilt.image_z[q] == c.image_z[q]


def test_clifford_unitary_conjugation_matches_map():
    for _ in range(10):
        n = int(rng.integers(1, 4))
        c = random_clifford(n)
        u = c.to_unitary()
        assert np.allclose(u @ u.conj().T, np.eye(2 ** n), atol=1e-10)
        for _ in range(5):
            p = random_pauli(n)
            assert np.allclose(
                u @ p.to_matrix() @ u.conj().T, c.apply(p).to_matrix(), atol=1e-9
            )


def test_clifford_inverse_and_compose():
    for _ in range(10):
        n = int(rng.integers(1, 5))
        c = random_clifford(n)
        inv = c.inverse()
        ident = c.compose(inv)
        for q in range(n):
            assert ident.image_x[q] == PauliString.single(n, q, "X")
            assert ident.image_z[q] == PauliString.single(n, q, "Z")


def test_from_unitary_rejects_non_clifford():
    t = np.diag([1, np.exp(1j * np.pi / 4)])
    with pytest.raises(ValueError):
        CliffordMap.from_unitary(t)


def test_from_unitary_recovers_map():
    for _ in range(8):
        n = int(rng.integers(1, 4))
        c = random_clifford(n)
        c2 = CliffordMap.from_unitary(c.to_unitary())
        for q in range(n):
            assert c2.image_x[q] == c.image_x[q]
            assert c2.image_z[q] == c.image_z[q]


def test_group_contains_signs():
    gens = [PauliString.from_label("ZZI"), PauliString.from_label("IZZ", sign=-1)]
    assert group_contains(gens, PauliString.from_label("ZIZ")) == -1
    assert group_contains(gens, PauliString.from_label("ZZI")) == 1
    assert group_contains(gens, PauliString.from_label("XII")) is None


def test_independent_generators():
    gens = [
        PauliString.from_label("ZZ"),
        PauliString.from_label("ZZ", sign=-1),
        PauliString.from_label("XX"),
    ]
    indep = independent_generators(gens)
    assert len(indep) == 2
