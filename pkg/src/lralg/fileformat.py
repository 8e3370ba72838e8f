"""Plain-text formats for algebras, polynomial systems, and extension data.

Algebra files:

    # comments run to end of line
    algebra heisenberg
    dim 3
    [1,2] = e3
    product
    (1,2) = 1/2*e3
    (2,1) = -1/2*e3

Bracket lines give [e_i, e_j]; the other orientation is implied.  The
optional product section lists e_i . e_j for an LR-structure; unlisted
pairs multiply to zero.  Vector expressions are sums of terms, each an
optional rational coefficient times a basis symbol e<k>.

Polynomial system files:

    dim 3
    x[1][1][2]^2 - x[2][1][1] + 1/2

One polynomial per line over the product unknowns x[i][j][k] (the
coefficient of e_j in e_i . e_k, all indices 1-based), written largest
term first in the graded order.

Extension files:

    extension radical
    kernel 2
    base 2
    [1,2] = e1
    phi 1 = [0, 1; 0, 0]
    phi 2 = [1, 0; 0, 1]
    omega (1,2) = a1 - 1/2*a2

phi matrices act on the kernel (rows separated by semicolons); omega
values are kernel vectors over the symbols a<k>.  Omitted omega pairs
are zero and the (j,i) value is implied by antisymmetry.

All parse failures raise ParseError carrying 1-based line and column.
"""

import re
from dataclasses import dataclass
from typing import Sequence

from .extensions import ExtensionData
from .lie import LieAlgebra, SparseVec, lie_from_table
from .linalg import QQ, Matrix, Vector
from .lr import LRAlgebra, lr_from_table
from .poly import Polynomial


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class MissingSection(ValueError):
    pass


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


class _Scanner:
    """Character scanner over one line, reporting 1-based columns."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def fail(self, message: str, at: int | None = None):
        col = (self.pos if at is None else at) + 1
        raise ParseError(self.line_no, col, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            self.fail(f"expected {ch!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number", start)
        return int(self.text[start : self.pos])

    def rational(self) -> QQ:
        self.skip_ws()
        start = self.pos
        sign = 1
        if self.take("-"):
            sign = -1
        elif self.take("+"):
            pass
        num = self.integer()
        if self.take("/"):
            den = self.integer()
            if den == 0:
                self.fail("zero denominator", start)
            return QQ(sign * num, den)
        return QQ(sign * num)


def _parse_vector(
    sc: _Scanner, dim: int, prefix: str
) -> Vector:
    """Sum of terms: [sign] [rational [*]] <prefix><index>."""
    out = [QQ(0)] * dim
    first = True
    while True:
        sc.skip_ws()
        if sc.done():
            if first:
                sc.fail("expected a vector expression")
            break
        sign = QQ(1)
        if sc.take("-"):
            sign = QQ(-1)
        elif sc.take("+"):
            pass
        elif not first:
            sc.fail("expected '+' or '-' between terms")
        sc.skip_ws()
        coeff = QQ(1)
        ch = sc.peek()
        if ch.isdigit():
            coeff = sc.rational()
            sc.take("*")
        sc.skip_ws()
        at = sc.pos
        if not sc.take(prefix):
            sc.fail(f"expected basis symbol {prefix!r}", at)
        idx = sc.integer()
        if not (1 <= idx <= dim):
            sc.fail(f"basis index {idx} out of range 1..{dim}", at)
        out[idx - 1] += sign * coeff
        first = False
    return tuple(out)


def _format_vector(v, prefix: str = "e") -> str:
    parts = []
    for idx, c in enumerate(v):
        if c == 0:
            continue
        sym = f"{prefix}{idx + 1}"
        if c == 1:
            piece = sym
        elif c == -1:
            piece = f"-{sym}"
        else:
            piece = f"{c}*{sym}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


_BRACKET_RE = re.compile(r"^\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=")
_PRODUCT_RE = re.compile(r"^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=")


@dataclass
class AlgebraFile:
    name: str
    dim: int
    brackets: list[tuple[int, int, Vector]]
    products: list[tuple[int, int, Vector]] | None

    def to_lie(self) -> LieAlgebra:
        return lie_from_table(self.dim, self.brackets)

    def to_lr(self, validate: bool = True) -> LRAlgebra:
        if self.products is None:
            raise MissingSection(
                "the file has no product section, so there is no LR-structure"
            )
        return lr_from_table(self.to_lie(), self.products, validate=validate)


def parse_algebra_text(text: str) -> AlgebraFile:
    name: str | None = None
    dim: int | None = None
    brackets: list[tuple[int, int, Vector]] = []
    products: list[tuple[int, int, Vector]] | None = None
    bracket_seen: dict[tuple[int, int], Vector] = {}
    product_seen: dict[tuple[int, int], Vector] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.startswith("algebra"):
            rest = stripped[len("algebra") :].strip()
            if not rest:
                raise ParseError(line_no, len(body) + 1, "missing algebra name")
            name = rest
            continue
        if stripped.startswith("dim"):
            sc = _Scanner(body, line_no)
            sc.pos = body.index("dim") + 3
            dim = sc.integer()
            if dim <= 0:
                sc.fail("dimension must be positive")
            if not sc.done():
                sc.fail("unexpected text after dimension")
            continue
        if stripped == "product":
            if products is not None:
                raise ParseError(line_no, 1, "duplicate product section")
            products = []
            continue
        m = _BRACKET_RE.match(body)
        if m:
            if dim is None:
                raise ParseError(line_no, 1, "dim must come before entries")
            if products is not None:
                raise ParseError(
                    line_no, 1, "bracket entries must precede the product section"
                )
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(
                    line_no, m.start(1) + 1, f"index out of range 1..{dim}"
                )
            sc = _Scanner(body, line_no)
            sc.pos = m.end()
            v = _parse_vector(sc, dim, "e")
            if i == j and any(c != 0 for c in v):
                raise ParseError(
                    line_no, 1, f"[{i},{i}] must be zero by antisymmetry"
                )
            if bracket_seen.get((i, j), v) != v:
                raise ParseError(
                    line_no, 1, f"conflicting value for [{i},{j}]"
                )
            neg = tuple(-c for c in v)
            if bracket_seen.get((j, i), neg) != neg:
                raise ParseError(
                    line_no,
                    1,
                    f"[{i},{j}] contradicts [{j},{i}] under antisymmetry",
                )
            bracket_seen[(i, j)] = v
            brackets.append((i, j, v))
            continue
        m = _PRODUCT_RE.match(body)
        if m:
            if dim is None:
                raise ParseError(line_no, 1, "dim must come before entries")
            if products is None:
                raise ParseError(
                    line_no, 1, "product entries require a product section"
                )
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(
                    line_no, m.start(1) + 1, f"index out of range 1..{dim}"
                )
            sc = _Scanner(body, line_no)
            sc.pos = m.end()
            v = _parse_vector(sc, dim, "e")
            if product_seen.get((i, j), v) != v:
                raise ParseError(
                    line_no, 1, f"conflicting value for ({i},{j})"
                )
            product_seen[(i, j)] = v
            products.append((i, j, v))
            continue
        raise ParseError(line_no, 1, f"unrecognized line: {stripped!r}")
    if dim is None:
        raise ParseError(1, 1, "missing dim line")
    return AlgebraFile(name or "unnamed", dim, brackets, products)


def parse_algebra_file(path) -> AlgebraFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def format_algebra(
    name: str,
    g: LieAlgebra,
    a: LRAlgebra | None = None,
) -> str:
    """Canonical text: brackets for i < j only, then the product section
    when an LR-structure is supplied, all in index order."""
    n = g.dim
    lines = [f"algebra {name}", f"dim {n}"]
    for i in range(n):
        for j in range(i + 1, n):
            v = g.bracket_basis(i, j)
            if v:
                dense = tuple(v.get(k, QQ(0)) for k in range(n))
                lines.append(f"[{i + 1},{j + 1}] = {_format_vector(dense)}")
    if a is not None:
        lines.append("product")
        for i in range(n):
            for j in range(n):
                v = a.product_basis(i, j)
                if v:
                    dense = tuple(v.get(k, QQ(0)) for k in range(n))
                    lines.append(f"({i + 1},{j + 1}) = {_format_vector(dense)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# polynomial system files


_XVAR_RE = re.compile(r"x\[\s*(\d+)\s*\]\[\s*(\d+)\s*\]\[\s*(\d+)\s*\]")


def _parse_poly_line(body: str, line_no: int, dim: int) -> Polynomial:
    sc = _Scanner(body, line_no)

    def factor(factors: dict[int, int]):
        at = sc.pos
        m = _XVAR_RE.match(sc.text, sc.pos)
        if not m:
            sc.fail("malformed variable, expected x[i][j][k]", at)
        i, j, k = (int(m.group(t)) for t in (1, 2, 3))
        for idx in (i, j, k):
            if not (1 <= idx <= dim):
                sc.fail(f"variable index {idx} out of range 1..{dim}", at)
        sc.pos = m.end()
        var = ((i - 1) * dim + (j - 1)) * dim + (k - 1)
        exp = 1
        if sc.take("^"):
            exp = sc.integer()
            if exp <= 0:
                sc.fail("exponent must be positive", at)
        factors[var] = factors.get(var, 0) + exp

    terms: dict = {}
    first = True
    while not sc.done():
        sign = QQ(1)
        if sc.take("-"):
            sign = QQ(-1)
        elif sc.take("+"):
            pass
        elif not first:
            sc.fail("expected '+' or '-' between terms")
        first = False
        sc.skip_ws()
        coeff = QQ(1)
        factors: dict[int, int] = {}
        if sc.peek().isdigit():
            coeff = sc.rational()
        elif sc.peek() == "x":
            factor(factors)
        else:
            sc.fail("expected a coefficient or a variable")
        while True:
            sc.skip_ws()
            if sc.take("*"):
                sc.skip_ws()
                factor(factors)
            elif sc.peek() == "x":
                factor(factors)
            else:
                break
        mono = tuple(sorted(factors.items()))
        val = terms.get(mono, QQ(0)) + sign * coeff
        if val:
            terms[mono] = val
        else:
            terms.pop(mono, None)
    return Polynomial(terms)


@dataclass
class SystemFile:
    dim: int
    polys: list[Polynomial]

    def var_name(self, v: int) -> str:
        n = self.dim
        i, rem = divmod(v, n * n)
        j, k = divmod(rem, n)
        return f"x[{i + 1}][{j + 1}][{k + 1}]"


def parse_system_text(text: str) -> SystemFile:
    dim: int | None = None
    polys: list[Polynomial] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.startswith("dim"):
            if dim is not None:
                raise ParseError(line_no, 1, "duplicate dim line")
            sc = _Scanner(body, line_no)
            sc.pos = body.index("dim") + 3
            dim = sc.integer()
            if dim <= 0:
                sc.fail("dimension must be positive")
            continue
        if dim is None:
            raise ParseError(line_no, 1, "dim must come before polynomials")
        polys.append(_parse_poly_line(body, line_no, dim))
    if dim is None:
        raise ParseError(1, 1, "missing dim line")
    return SystemFile(dim, polys)


def parse_system_file(path) -> SystemFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system_text(fh.read())


def format_system(dim: int, polys: Sequence[Polynomial]) -> str:
    def namer(v: int) -> str:
        i, rem = divmod(v, dim * dim)
        j, k = divmod(rem, dim)
        return f"x[{i + 1}][{j + 1}][{k + 1}]"

    lines = [f"dim {dim}"]
    for p in polys:
        lines.append(p.to_string(namer))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# extension data files


_PHI_RE = re.compile(r"^\s*phi\s+(\d+)\s*=\s*\[")
_OMEGA_RE = re.compile(r"^\s*omega\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=")
_KV_RE = re.compile(r"^\s*(kernel|base)\s+(\d+)\s*$")


def _parse_matrix(sc: _Scanner, size: int) -> Matrix:
    """[a, b; c, d] with rational entries; must be size x size."""
    rows: list[list[QQ]] = [[]]
    while True:
        rows[-1].append(sc.rational())
        sc.skip_ws()
        if sc.take(","):
            continue
        if sc.take(";"):
            rows.append([])
            continue
        sc.expect("]")
        break
    if len(rows) != size or any(len(r) != size for r in rows):
        sc.fail(f"matrix must be {size}x{size}")
    return Matrix(rows)


def parse_extension_text(text: str):
    """Returns (name, ExtensionData)."""
    name = "unnamed"
    a_dim: int | None = None
    b_dim: int | None = None
    brackets: list[tuple[int, int, Vector]] = []
    phis: dict[int, Matrix] = {}
    omegas: dict[tuple[int, int], Vector] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.startswith("extension"):
            rest = stripped[len("extension") :].strip()
            if rest:
                name = rest
            continue
        m = _KV_RE.match(body)
        if m:
            val = int(m.group(2))
            if val <= 0:
                raise ParseError(line_no, m.start(2) + 1, "size must be positive")
            if m.group(1) == "kernel":
                a_dim = val
            else:
                b_dim = val
            continue
        m = _BRACKET_RE.match(body)
        if m:
            if b_dim is None:
                raise ParseError(line_no, 1, "base size must come before brackets")
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= b_dim and 1 <= j <= b_dim):
                raise ParseError(
                    line_no, m.start(1) + 1, f"index out of range 1..{b_dim}"
                )
            sc = _Scanner(body, line_no)
            sc.pos = m.end()
            brackets.append((i, j, _parse_vector(sc, b_dim, "e")))
            continue
        m = _PHI_RE.match(body)
        if m:
            if a_dim is None or b_dim is None:
                raise ParseError(
                    line_no, 1, "kernel and base sizes must come before phi"
                )
            i = int(m.group(1))
            if not (1 <= i <= b_dim):
                raise ParseError(
                    line_no, m.start(1) + 1, f"phi index out of range 1..{b_dim}"
                )
            if i in phis:
                raise ParseError(line_no, 1, f"duplicate phi {i}")
            sc = _Scanner(body, line_no)
            sc.pos = m.end()
            phis[i] = _parse_matrix(sc, a_dim)
            if not sc.done():
                sc.fail("unexpected text after matrix")
            continue
        m = _OMEGA_RE.match(body)
        if m:
            if a_dim is None or b_dim is None:
                raise ParseError(
                    line_no, 1, "kernel and base sizes must come before omega"
                )
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= b_dim and 1 <= j <= b_dim):
                raise ParseError(
                    line_no, m.start(1) + 1, f"index out of range 1..{b_dim}"
                )
            sc = _Scanner(body, line_no)
            sc.pos = m.end()
            val = _parse_vector(sc, a_dim, "a")
            for key, vec in (((i, j), val), ((j, i), tuple(-c for c in val))):
                if key in omegas and omegas[key] != vec:
                    raise ParseError(
                        line_no, 1, f"omega value conflicts at {key}"
                    )
                omegas[key] = vec
            continue
        raise ParseError(line_no, 1, f"unrecognized line: {stripped!r}")
    if a_dim is None:
        raise ParseError(1, 1, "missing kernel line")
    if b_dim is None:
        raise ParseError(1, 1, "missing base line")
    for i in range(1, b_dim + 1):
        if i not in phis:
            phis[i] = Matrix.zero(a_dim, a_dim)
    base = lie_from_table(b_dim, brackets)
    zero = tuple(QQ(0) for _ in range(a_dim))
    omega = tuple(
        tuple(omegas.get((i + 1, j + 1), zero) for j in range(b_dim))
        for i in range(b_dim)
    )
    data = ExtensionData(
        a_dim, base, tuple(phis[i] for i in range(1, b_dim + 1)), omega
    )
    return name, data


def parse_extension_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_extension_text(fh.read())


def format_extension(name: str, d: ExtensionData) -> str:
    lines = [f"extension {name}", f"kernel {d.a_dim}", f"base {d.b.dim}"]
    m = d.b.dim
    for i in range(m):
        for j in range(i + 1, m):
            v = d.b.bracket_basis(i, j)
            if v:
                dense = tuple(v.get(k, QQ(0)) for k in range(m))
                lines.append(f"[{i + 1},{j + 1}] = {_format_vector(dense)}")
    for i in range(m):
        if not d.phi[i].is_zero():
            rows = "; ".join(
                ", ".join(str(c) for c in row) for row in d.phi[i].entries
            )
            lines.append(f"phi {i + 1} = [{rows}]")
    for i in range(m):
        for j in range(i + 1, m):
            v = d.omega[i][j]
            if any(c != 0 for c in v):
                lines.append(
                    f"omega ({i + 1},{j + 1}) = {_format_vector(v, 'a')}"
                )
    return "\n".join(lines) + "\n"
