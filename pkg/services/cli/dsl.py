"""
Algebra Description Language

Grammar (keywords are plain names; paths compose left to right):

    manifest   := statement* EOF
    statement  := algebra | catalog | grading
    algebra    := 'algebra' NAME '{' 'vertices' ':' ID (',' ID)* ';'
                  'arrows' ':' arrow (',' arrow)* ';'
                  ['relations' ':' (relation ';')*] '}'
    arrow      := NAME ':' ID '->' ID
    relation   := expr '=' expr
    expr       := '0' | term ('+' term)*
    term       := [INT '*'] factor ('*' factor)*
    factor     := NAME ['^' INT] | '(' factor ('*' factor)* ')' '^' INT
    catalog    := 'catalog' NAME 'r' '=' INT ['c' '=' INT] ';'
    grading    := 'grading' '{' (NAME '=' ['-'] INT ';')* '}'

Example:

    algebra D1C {
      vertices: 1;
      arrows: a: 1->1, b: 1->1;
      relations: a^2 = 0; b^2 = 0; (a*b)^3 = (b*a)^3;
    }
    grading { a = 1; b = 1; }
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Optional

from services.block_catalog import BlockId, make_block, parse_block_id
from services.common.errors import DslSyntaxError, InvalidBlockError, QuiverError
from services.common.settings import load_settings
from services.quiver_core import (
    AlgebraElement,
    Arrow,
    DegreeAssignment,
    GaloisField,
    Quiver,
    field_of,
    format_word,
)
from services.rewrite_engine import AlgebraPresentation, Relation, complete

logger = logging.getLogger(__name__)

TOKEN_SPEC = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("ARROW", r"->"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("INT", r"\d+"),
    ("PUNCT", r"[{}:;,=+*^()\-]"),
    ("ERROR", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int

    def label(self) -> str:
        if self.kind == "EOF":
            return "end of input"
        return repr(self.value)


def tokenize(text: str) -> list[Token]:
    """
    Split text into tokens with 1-based positions.

    Raises:
        DslSyntaxError: on a character outside the language
    """
    tokens: list[Token] = []
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(text):
        kind, value = match.lastgroup, match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind in ("SKIP", "COMMENT"):
            continue
        elif kind == "ERROR":
            raise DslSyntaxError(f"unexpected character {value!r}", line, column)
        else:
            tokens.append(Token(kind, value, line, column))
    tokens.append(Token("EOF", "", line, len(text) - line_start + 1))
    return tokens


@dataclass(frozen=True)
class Term:
    """coefficient * word; the word is the expanded arrow sequence."""

    coefficient: int
    word: tuple[str, ...]


@dataclass(frozen=True)
class RelationSpec:
    left: tuple[Term, ...]
    right: tuple[Term, ...]


@dataclass(frozen=True)
class Manifest:
    """
    A parsed algebra description.

    Either an explicit algebra (name, vertices, arrows, relations) or a catalog
    reference, plus an optional grading.
    """

    name: Optional[str] = None
    vertices: tuple[str, ...] = ()
    arrows: tuple[tuple[str, str, str], ...] = ()
    relations: tuple[RelationSpec, ...] = ()
    catalog: Optional[BlockId] = None
    grading: Optional[tuple[tuple[str, int], ...]] = None

    @property
    def is_catalog(self) -> bool:
        return self.catalog is not None

    @property
    def has_algebra(self) -> bool:
        return self.catalog is not None or self.name is not None

    def quiver(self) -> Quiver:
        return Quiver(list(self.vertices), [Arrow(n, s, t) for n, s, t in self.arrows])

    def presentation(self, field: Optional[GaloisField] = None) -> AlgebraPresentation:
        """
        Build the completed presentation.

        Raises:
            QuiverError: if the manifest has no algebra
            FieldError: coefficient out of range for the field
            NotFiniteDimensionalError: if completion runs past its guard
        """
        settings = load_settings().apply_env()
        if field is None:
            field = field_of(settings.field.degree)
        if self.catalog is not None:
            return make_block(self.catalog, field)
        if self.name is None:
            raise QuiverError("Manifest defines no algebra")
        quiver = self.quiver()

        def element(terms: tuple[Term, ...]) -> AlgebraElement:
            total = AlgebraElement.zero(quiver, field)
            for term in terms:
                path = quiver.path(*term.word)
                total = total + AlgebraElement.from_path(quiver, field, path, field(term.coefficient))
            return total

        relations = [
            Relation(element(r.left), element(r.right), text=print_relation(r))
            for r in self.relations
        ]
        return complete(
            quiver,
            relations,
            max_len=settings.completion.default_max_len,
            field=field,
            max_rules=settings.completion.max_rules,
            name=self.name,
        )

    def degree_assignment(self, pres: AlgebraPresentation) -> Optional[DegreeAssignment]:
        """
        The attached grading over pres, or None.

        Raises:
            QuiverError: if the grading names unknown arrows or misses some
        """
        if self.grading is None:
            return None
        values = dict(self.grading)
        unknown = sorted(set(values) - set(pres.quiver.arrow_names))
        if unknown:
            raise QuiverError(f"Grading names unknown arrows: {', '.join(unknown)}")
        missing = [a for a in pres.quiver.arrow_names if a not in values]
        if missing:
            raise QuiverError(f"Grading misses arrows: {', '.join(missing)}")
        return DegreeAssignment.for_quiver(pres.quiver, values)


class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.arrows: dict[str, tuple[str, str]] = {}

    # Token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, expected: tuple[str, ...] = (), token: Optional[Token] = None) -> DslSyntaxError:
        token = token or self.current
        return DslSyntaxError(message, token.line, token.column, expected)

    def at(self, value: str) -> bool:
        token = self.current
        return token.kind in ("PUNCT", "ARROW", "NAME") and token.value == value

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.pos += 1
            return True
        return False

    def expect(self, *values: str) -> Token:
        token = self.current
        if token.kind in ("PUNCT", "ARROW", "NAME") and token.value in values:
            self.pos += 1
            return token
        raise self.error(f"unexpected {token.label()}", tuple(f"'{v}'" for v in values))

    def expect_kind(self, kind: str) -> Token:
        token = self.current
        if token.kind == kind:
            self.pos += 1
            return token
        raise self.error(f"unexpected {token.label()}", (kind,))

    def identifier(self) -> Token:
        token = self.current
        if token.kind in ("NAME", "INT"):
            self.pos += 1
            return token
        raise self.error(f"unexpected {token.label()}", ("INT", "NAME"))

    def integer(self, allow_negative: bool = False) -> int:
        negative = allow_negative and self.accept("-")
        value = int(self.expect_kind("INT").value)
        return -value if negative else value

    # Statements

    def manifest(self) -> Manifest:
        fields: dict = {}
        while self.current.kind != "EOF":
            token = self.current
            if self.at("algebra") or self.at("catalog"):
                if "name" in fields or "catalog" in fields:
                    raise self.error("only one algebra per manifest", token=token)
                fields.update(self.algebra() if self.at("algebra") else self.catalog())
            elif self.at("grading"):
                if "grading" in fields:
                    raise self.error("only one grading per manifest", token=token)
                fields["grading"] = self.grading()
            else:
                raise self.error(
                    f"unexpected {token.label()}", ("'algebra'", "'catalog'", "'grading'")
                )
        return Manifest(**fields)

    def algebra(self) -> dict:
        self.expect("algebra")
        name = self.identifier().value
        self.expect("{")
        self.expect("vertices")
        self.expect(":")
        vertices = [self.identifier()]
        while self.accept(","):
            vertices.append(self.identifier())
        self.expect(";")
        seen: set[str] = set()
        for token in vertices:
            if token.value in seen:
                raise self.error(f"duplicate vertex {token.value}", token=token)
            seen.add(token.value)

        self.expect("arrows")
        self.expect(":")
        arrows = [self.arrow_decl(seen)]
        while self.accept(","):
            arrows.append(self.arrow_decl(seen))
        self.expect(";")

        relations: list[RelationSpec] = []
        if self.accept("relations"):
            self.expect(":")
            while not self.at("}"):
                relations.append(self.relation())
                self.expect(";")
        self.expect("}")
        return {
            "name": name,
            "vertices": tuple(t.value for t in vertices),
            "arrows": tuple(arrows),
            "relations": tuple(relations),
        }

    def arrow_decl(self, vertices: set[str]) -> tuple[str, str, str]:
        token = self.expect_kind("NAME")
        if token.value in self.arrows:
            raise self.error(f"duplicate arrow {token.value}", token=token)
        self.expect(":")
        source = self.vertex_ref(vertices)
        self.expect("->")
        target = self.vertex_ref(vertices)
        self.arrows[token.value] = (source, target)
        return (token.value, source, target)

    def vertex_ref(self, vertices: set[str]) -> str:
        token = self.identifier()
        if token.value not in vertices:
            raise self.error(f"unknown vertex {token.value}", tuple(sorted(vertices)), token)
        return token.value

    def catalog(self) -> dict:
        self.expect("catalog")
        family = self.expect_kind("NAME")
        self.expect("r")
        self.expect("=")
        r = self.integer()
        c = None
        if self.accept("c"):
            self.expect("=")
            c = self.integer()
        self.expect(";")
        try:
            block = parse_block_id(family.value, r, c)
        except InvalidBlockError as e:
            raise self.error(str(e), token=family) from e
        return {"catalog": block}

    def grading(self) -> tuple[tuple[str, int], ...]:
        self.expect("grading")
        self.expect("{")
        values: dict[str, int] = {}
        while not self.at("}"):
            token = self.expect_kind("NAME")
            if self.arrows and token.value not in self.arrows:
                raise self.error(f"unknown arrow {token.value}", tuple(sorted(self.arrows)), token)
            if token.value in values:
                raise self.error(f"duplicate degree for {token.value}", token=token)
            self.expect("=")
            values[token.value] = self.integer(allow_negative=True)
            self.expect(";")
        self.expect("}")
        return tuple(values.items())

    # Expressions

    def relation(self) -> RelationSpec:
        start = self.current
        left = self.expression()
        self.expect("=")
        right = self.expression()
        ends = {self.endpoints(term.word) for term in left + right}
        if not left and not right:
            raise self.error("relation 0 = 0 is empty", token=start)
        if len(ends) > 1:
            described = ", ".join(f"{s}->{t}" for s, t in sorted(ends))
            raise self.error(f"relation is not parallel: endpoints {described}", token=start)
        return RelationSpec(left, right)

    def expression(self) -> tuple[Term, ...]:
        token = self.current
        if token.kind == "INT" and token.value.strip("0") == "" and not self._next_is("*"):
            self.pos += 1
            return ()
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return tuple(terms)

    def _next_is(self, value: str) -> bool:
        following = self.tokens[self.pos + 1]
        return following.kind == "PUNCT" and following.value == value

    def term(self) -> Term:
        coefficient = 1
        if self.current.kind == "INT":
            coefficient = int(self.current.value)
            self.pos += 1
            self.expect("*")
        word = list(self.factor())
        while self.accept("*"):
            word.extend(self.factor())
        return Term(coefficient, tuple(word))

    def factor(self) -> tuple[str, ...]:
        if self.accept("("):
            word = list(self.factor())
            while self.accept("*"):
                word.extend(self.factor())
            self.expect(")")
            self.expect("^")
            return tuple(word) * self.exponent()
        token = self.current
        if token.kind != "NAME":
            raise self.error(f"unexpected {token.label()}", ("'('", "INT", "NAME"))
        if token.value not in self.arrows:
            raise self.error(f"unknown arrow {token.value}", tuple(sorted(self.arrows)), token)
        self.pos += 1
        if self.accept("^"):
            return (token.value,) * self.exponent()
        return (token.value,)

    def exponent(self) -> int:
        token = self.current
        value = self.integer()
        if value == 0:
            raise self.error("exponent must be positive", ("INT",), token)
        return value

    def endpoints(self, word: tuple[str, ...]) -> tuple[str, str]:
        source, target = self.arrows[word[0]]
        for name in word[1:]:
            start, end = self.arrows[name]
            if start != target:
                raise self.error(f"arrows do not compose: {target} then {name} starts at {start}")
            target = end
        return source, target


def parse(text: str) -> Manifest:
    """
    Parse a manifest.

    Raises:
        DslSyntaxError: with line, column and the expected tokens

    Example:
        >>> parse("catalog D2A r=3 c=1;").catalog.label
        'D2A^{3,1}'
    """
    manifest = _Parser(text).manifest()
    logger.debug("Parsed manifest", extra={"algebra": manifest.name, "catalog": str(manifest.catalog)})
    return manifest


def parse_expression(text: str, pres: AlgebraPresentation) -> AlgebraElement:
    """
    Parse an element such as "a1 + b1*a1*a2" over pres, in normal form.

    Raises:
        DslSyntaxError: on malformed input or unknown arrows
        FieldError: coefficient out of range
    """
    parser = _Parser(text)
    parser.arrows = {a.name: (a.source, a.target) for a in pres.quiver.arrows}
    terms = parser.expression()
    if parser.current.kind != "EOF":
        raise parser.error(f"unexpected {parser.current.label()}", ("'+'", "'*'", "end of input"))
    total = pres.zero()
    for term in terms:
        parser.endpoints(term.word)
        total = total + pres.path_element(pres.quiver.path(*term.word), pres.field(term.coefficient))
    return pres.normal_form(total)


def print_terms(terms: tuple[Term, ...]) -> str:
    if not terms:
        return "0"
    parts = []
    for term in terms:
        text = format_word(term.word)
        parts.append(text if term.coefficient == 1 else f"{term.coefficient}*{text}")
    return " + ".join(parts)


def print_relation(relation: RelationSpec) -> str:
    return f"{print_terms(relation.left)} = {print_terms(relation.right)}"


def print_manifest(manifest: Manifest) -> str:
    """Canonical text of a manifest; parse(print_manifest(m)) == m."""
    lines: list[str] = []
    if manifest.catalog is not None:
        block = manifest.catalog
        suffix = f" c={block.c}" if block.c is not None else ""
        lines.append(f"catalog {block.family} r={block.r}{suffix};")
    elif manifest.name is not None:
        lines.append(f"algebra {manifest.name} {{")
        lines.append(f"  vertices: {', '.join(manifest.vertices)};")
        arrows = ", ".join(f"{n}: {s}->{t}" for n, s, t in manifest.arrows)
        lines.append(f"  arrows: {arrows};")
        if manifest.relations:
            lines.append("  relations:")
            lines.extend(f"    {print_relation(r)};" for r in manifest.relations)
        lines.append("}")
    if manifest.grading is not None:
        body = " ".join(f"{a} = {d};" for a, d in manifest.grading)
        lines.append(f"grading {{ {body} }}" if body else "grading { }")
    return "\n".join(lines) + "\n"


def catalog_manifest(block: BlockId, grading: Optional[DegreeAssignment] = None) -> Manifest:
    values = tuple((a, int(d)) for a, d in grading.items()) if grading is not None else None
    return Manifest(catalog=block, grading=values)


__all__ = [
    "Manifest",
    "RelationSpec",
    "Term",
    "Token",
    "catalog_manifest",
    "parse",
    "parse_expression",
    "print_manifest",
    "print_relation",
    "print_terms",
    "tokenize",
]
