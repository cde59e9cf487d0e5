"""Cayley-graph construction of the (p+1)-regular LPS graphs X^{p,q}.

For primes p, q congruent to 1 mod 4, the p+1 integer quaternions of
norm p with odd positive first coordinate embed as 2x2 matrices over
F_q.  Their images in PGL2(F_q) (when p is a non-residue mod q) or
PSL2(F_q) (when p is a residue) form an inverse-closed connection set,
and the resulting Cayley graph is Ramanujan.

Group elements are canonicalized by scaling so the first nonzero entry
in row-major order equals 1, which turns projective equality into tuple
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import GroupSizeMismatch, InvalidPrime, NoSquareRoot
from .graphs import Graph, build_graph, certify_regular

Mat = tuple[int, int, int, int]  # row-major 2x2 over F_q

DEFAULT_Q_LIMIT = 29


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre_symbol(a: int, q: int) -> int:
    """Legendre symbol (a/q) for odd prime q, via Euler's criterion."""
    if q < 3 or not is_prime(q):
        raise InvalidPrime(f"{q} is not an odd prime")
    r = pow(a % q, (q - 1) // 2, q)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def sqrt_mod(a: int, q: int) -> int:
    """Square root of a mod prime q by Tonelli-Shanks; returns the smaller root.

    Raises NoSquareRoot when a is a quadratic non-residue.
    """
    if not is_prime(q) or q == 2:
        raise InvalidPrime(f"{q} is not an odd prime")
    a %= q
    if a == 0:
        return 0
    if legendre_symbol(a, q) == -1:
        raise NoSquareRoot(f"{a} is not a square mod {q}")
    if q % 4 == 3:
        x = pow(a, (q + 1) // 4, q)
        return min(x, q - x)
    # write q - 1 = s * 2^e with s odd
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    # deterministic non-residue search starting at 2
    z = 2
    while legendre_symbol(z, q) != -1:
        z += 1
    c = pow(z, s, q)
    x = pow(a, (s + 1) // 2, q)
    t = pow(a, s, q)
    m = e
    while t != 1:
        # find least i with t^(2^i) = 1
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        x = x * b % q
        c = b * b % q
        t = t * c % q
        m = i
    return min(x, q - x)


@dataclass(frozen=True, order=True)
class QuaternionGenerator:
    """Integer quaternion a0 + a1 i + a2 j + a3 k of norm p."""

    a0: int
    a1: int
    a2: int
    a3: int

    def conjugate(self) -> "QuaternionGenerator":
        return QuaternionGenerator(self.a0, -self.a1, -self.a2, -self.a3)


def quaternion_generators(p: int) -> list[QuaternionGenerator]:
    """All norm-p integer quaternions with a0 odd positive and a1, a2, a3 even.

    For p prime with p = 1 mod 4 there are exactly p+1 of them; returned
    in lexicographic order.
    """
    if not is_prime(p) or p % 4 != 1:
        raise InvalidPrime(f"p must be a prime congruent to 1 mod 4, got {p}")
    out = []
    r = isqrt(p)
    for a0 in range(1, r + 1, 2):
        rest0 = p - a0 * a0
        b1 = isqrt(rest0)
        for a1 in range(-b1 - (b1 % 2), b1 + 1, 2):
            rest1 = rest0 - a1 * a1
            if rest1 < 0:
                continue
            b2 = isqrt(rest1)
            for a2 in range(-b2 - (b2 % 2), b2 + 1, 2):
                rest2 = rest1 - a2 * a2
                if rest2 < 0:
                    continue
                a3 = isqrt(rest2)
                if a3 * a3 == rest2 and a3 % 2 == 0:
                    out.append(QuaternionGenerator(a0, a1, a2, a3))
                    if a3 != 0:
                        out.append(QuaternionGenerator(a0, a1, a2, -a3))
    out.sort()
    if len(out) != p + 1:
        raise GroupSizeMismatch(f"expected {p + 1} generators for p={p}, found {len(out)}")
    return out


@dataclass(frozen=True)
class LpsParams:
    """Parameters of a constructed X^{p,q}."""

    p: int
    q: int
    legendre_pq: int
    group_kind: str  # "PGL2" or "PSL2"
    expected_n: int
    i_mod_q: int


def mat_mul(x: Mat, y: Mat, q: int) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return (
        (a * e + b * g) % q,
        (a * f + b * h) % q,
        (c * e + d * g) % q,
        (c * f + d * h) % q,
    )


def mat_det(x: Mat, q: int) -> int:
    return (x[0] * x[3] - x[1] * x[2]) % q


def canonical_form(x: Mat, q: int) -> Mat:
    """Scale a nonzero matrix so its first nonzero row-major entry is 1."""
    for entry in x:
        if entry:
            inv = pow(entry, q - 2, q)
            return (x[0] * inv % q, x[1] * inv % q, x[2] * inv % q, x[3] * inv % q)
    raise ValueError("zero matrix has no canonical form")


def embed_generator(gen: QuaternionGenerator, q: int, i_mod_q: int) -> Mat:
    """Image of a quaternion in M_2(F_q) using a fixed square root of -1."""
    i = i_mod_q
    return (
        (gen.a0 + gen.a1 * i) % q,
        (gen.a2 + gen.a3 * i) % q,
        (-gen.a2 + gen.a3 * i) % q,
        (gen.a0 - gen.a1 * i) % q,
    )


def enumerate_group(q: int, kind: str) -> list[Mat]:
    """Canonical forms of PGL2(F_q) or PSL2(F_q), sorted.

    PSL2 membership is decided by the canonical form's determinant being
    a nonzero square mod q.
    """
    squares = {x * x % q for x in range(1, q)}
    seen = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    det = (a * d - b * c) % q
                    if det == 0:
                        continue
                    m = canonical_form((a, b, c, d), q)
                    if kind == "PSL2" and mat_det(m, q) not in squares:
                        continue
                    seen.add(m)
    return sorted(seen)


def lps_params(p: int, q: int) -> LpsParams:
    """Validate (p, q) and derive the construction parameters.

    Usable on its own to recover the parameter record for a graph that
    was built earlier and reloaded from a file.
    """
    if not is_prime(p) or p % 4 != 1:
        raise InvalidPrime(f"p must be a prime congruent to 1 mod 4, got {p}")
    if not is_prime(q) or q % 4 != 1:
        raise InvalidPrime(f"q must be a prime congruent to 1 mod 4, got {q}")
    if p == q:
        raise InvalidPrime("p and q must be distinct")
    leg = legendre_symbol(p, q)
    kind = "PGL2" if leg == -1 else "PSL2"
    expected_n = q * (q * q - 1) if kind == "PGL2" else q * (q * q - 1) // 2
    return LpsParams(
        p=p,
        q=q,
        legendre_pq=leg,
        group_kind=kind,
        expected_n=expected_n,
        i_mod_q=sqrt_mod(-1, q),
    )


def build_lps(p: int, q: int, *, allow_large: bool = False) -> tuple[Graph, LpsParams]:
    """Construct X^{p,q} and its parameter record.

    Refuses q > 29 unless allow_large is set (group order grows like q^3
    and the dense adjacency matrix with it).
    """
    params = lps_params(p, q)
    if q > DEFAULT_Q_LIMIT and not allow_large:
        raise InvalidPrime(
            f"q={q} exceeds the desk-scale limit {DEFAULT_Q_LIMIT}; pass allow_large=True to proceed"
        )
    leg = params.legendre_pq
    kind = params.group_kind
    expected_n = params.expected_n
    i_mod_q = params.i_mod_q
    gens = quaternion_generators(p)
    gen_mats = []
    for gen in gens:
        m = embed_generator(gen, q, i_mod_q)
        if mat_det(m, q) != p % q:
            raise GroupSizeMismatch("generator embedding has wrong determinant")
        gen_mats.append(canonical_form(m, q))
    vertices = enumerate_group(q, kind)
    if len(vertices) != expected_n:
        raise GroupSizeMismatch(
            f"enumerated {len(vertices)} elements of {kind}(F_{q}), expected {expected_n}"
        )
    index = {v: i for i, v in enumerate(vertices)}
    counts: dict[tuple[int, int], int] = {}
    for vi, v in enumerate(vertices):
        for gm in gen_mats:
            w = canonical_form(mat_mul(gm, v, q), q)
            wi = index[w]
            if wi == vi:
                raise GroupSizeMismatch("connection set acts with a fixed point")
            counts[(vi, wi)] = counts.get((vi, wi), 0) + 1
    # arc counts must be symmetric since the connection set is inverse-closed
    edges = []
    for (vi, wi), c in sorted(counts.items()):
        if counts.get((wi, vi), 0) != c:
            raise GroupSizeMismatch("connection set is not closed under inverses")
        if vi < wi:
            edges.append((vi, wi, c))
    g = build_graph(len(vertices), edges, vertex_transitive_hint=True)
    cert = certify_regular(g)
    if cert.degree != p + 1:
        raise GroupSizeMismatch(f"degree {cert.degree} != p+1 = {p + 1}")
    if cert.bipartite != (leg == -1):
        raise GroupSizeMismatch("bipartiteness disagrees with the Legendre symbol")
    return g, params
