"""
Rewriting-System Completion

Relations are oriented under the length-then-declaration-order path order
(the largest path of a relation is its leading term) and completed by
resolving overlap ambiguities until every pair of rules is confluent. The
result is a reduced rewriting system: no leading path contains another,
and tails are fully reduced.

Termination is guarded: a leading path longer than max_len or more than
max_rules rules raises NotFiniteDimensionalError with the offending path.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from services.common.errors import NotFiniteDimensionalError, QuiverError
from services.quiver_core import AlgebraElement, FieldElement, GaloisField, Path, Quiver, format_path

from .relations import Relation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RewriteRule:
    """lead -> tail, with every path of tail smaller than lead."""

    lead: Path
    tail: AlgebraElement

    def __str__(self) -> str:
        return f"{format_path(self.lead)} -> {self.tail}"


class RewriteSystem:
    """
    A set of rewrite rules indexed by leading arrow word.

    reduce() applies rules until no path contains a leading word; for a
    completed system the result is the unique normal form.
    """

    def __init__(self, quiver: Quiver, field: GaloisField, rules: Iterable[RewriteRule] = ()):
        self.quiver = quiver
        self.field = field
        self._rules: dict[tuple[str, ...], RewriteRule] = {}
        self._lengths: list[int] = []
        for rule in rules:
            self._insert(rule)

    def _insert(self, rule: RewriteRule) -> None:
        self._rules[rule.lead.arrows] = rule
        self._lengths = sorted({len(word) for word in self._rules})

    def _remove(self, word: tuple[str, ...]) -> RewriteRule:
        rule = self._rules.pop(word)
        self._lengths = sorted({len(w) for w in self._rules})
        return rule

    @property
    def rules(self) -> list[RewriteRule]:
        return sorted(self._rules.values(), key=lambda r: self.quiver.order_key(r.lead))

    def __len__(self) -> int:
        return len(self._rules)

    def find_match(self, path: Path) -> Optional[tuple[int, RewriteRule]]:
        """Leftmost occurrence of a leading word inside path, as (offset, rule)."""
        word = path.arrows
        n = len(word)
        for start in range(n):
            for length in self._lengths:
                if start + length > n:
                    break
                rule = self._rules.get(word[start:start + length])
                if rule is not None:
                    return start, rule
        return None

    def is_irreducible(self, path: Path) -> bool:
        return self.find_match(path) is None

    def has_suffix_match(self, path: Path) -> bool:
        """True if some leading word is a suffix of path (enough for one-arrow extensions)."""
        word = path.arrows
        n = len(word)
        for length in self._lengths:
            if length > n:
                break
            if word[n - length:] in self._rules:
                return True
        return False

    def reduce(self, element: AlgebraElement) -> AlgebraElement:
        order_key = self.quiver.order_key
        work: dict[Path, FieldElement] = element.terms()
        result: dict[Path, FieldElement] = {}
        while work:
            path = max(work, key=order_key)
            coefficient = work.pop(path)
            match = self.find_match(path)
            if match is None:
                result[path] = coefficient
                continue
            start, rule = match
            prefix = path.arrows[:start]
            suffix = path.arrows[start + rule.lead.length:]
            for tail_path, tail_coefficient in rule.tail.items():
                replaced = Path(path.source, path.target, prefix + tail_path.arrows + suffix)
                value = coefficient * tail_coefficient
                current = work.get(replaced)
                value = value if current is None else current + value
                if value:
                    work[replaced] = value
                else:
                    work.pop(replaced, None)
        return AlgebraElement(self.quiver, self.field, result)


def _orient(element: AlgebraElement) -> RewriteRule:
    lead = element.leading_path()
    if lead.is_vertex:
        raise QuiverError("A relation reduces a vertex idempotent; the ideal is not admissible")
    scale = element.coefficient(lead).inverse()
    monic = element.scale(scale)
    # lead + tail' = 0, so lead -> -tail' (= tail' in characteristic 2)
    tail = -(monic - AlgebraElement.from_path(element.quiver, element.field, lead))
    return RewriteRule(lead, tail)


def _overlaps(x: tuple[str, ...], y: tuple[str, ...]) -> list[int]:
    """Lengths k with 0 < k < min(len) where the last k letters of x start y."""
    limit = min(len(x), len(y))
    return [k for k in range(1, limit) if x[len(x) - k:] == y[:k]]


def _path_from_word(quiver: Quiver, source: str, word: tuple[str, ...]) -> Path:
    if not word:
        return Path(source, source)
    return Path(source, quiver.arrow(word[-1]).target, word)


def _critical_element(system: RewriteSystem, first: RewriteRule, second: RewriteRule, k: int) -> AlgebraElement:
    """Difference of the two one-step reductions of the overlap word."""
    quiver, field = system.quiver, system.field
    right_word = second.lead.arrows[k:]
    left_word = first.lead.arrows[: first.lead.length - k]
    right = AlgebraElement.from_path(
        quiver, field, _path_from_word(quiver, first.lead.target, right_word)
    )
    left = AlgebraElement.from_path(
        quiver, field, _path_from_word(quiver, first.lead.source, left_word)
    )
    return first.tail * right - left * second.tail


def complete_rules(
    quiver: Quiver,
    field: GaloisField,
    relations: Iterable[Relation],
    max_len: int,
    max_rules: int = 5000,
) -> RewriteSystem:
    """
    Complete relations into a confluent, reduced rewriting system.

    Args:
        quiver: the quiver
        field: coefficient field
        relations: defining relations
        max_len: no leading path may be longer than this
        max_rules: cap on the number of simultaneous rules

    Returns:
        RewriteSystem whose normal forms are unique

    Raises:
        NotFiniteDimensionalError: if a guard is exceeded
    """
    system = RewriteSystem(quiver, field)
    pending: deque[AlgebraElement] = deque(rel.element() for rel in relations)
    pairs: deque[tuple[tuple[str, ...], tuple[str, ...], int]] = deque()
    steps = 0

    def schedule(word: tuple[str, ...]) -> None:
        for other in list(system._rules):
            for k in _overlaps(word, other):
                pairs.append((word, other, k))
            if other != word:
                for k in _overlaps(other, word):
                    pairs.append((other, word, k))

    while pending or pairs:
        steps += 1
        if pending:
            candidate = pending.popleft()
        else:
            first_word, second_word, k = pairs.popleft()
            first = system._rules.get(first_word)
            second = system._rules.get(second_word)
            if first is None or second is None:
                continue
            candidate = _critical_element(system, first, second, k)

        candidate = system.reduce(candidate)
        if candidate.is_zero():
            continue

        rule = _orient(candidate)
        if rule.lead.length > max_len:
            raise NotFiniteDimensionalError(
                f"Completion produced leading path {format_path(rule.lead)} longer than {max_len}",
                witness=rule.lead,
            )

        # Rules whose leading word contains the new one are no longer reduced.
        for word in list(system._rules):
            if _contains(word, rule.lead.arrows):
                old = system._remove(word)
                pending.append(
                    AlgebraElement.from_path(quiver, field, old.lead) - old.tail
                )
        system._insert(rule)
        if len(system) > max_rules:
            raise NotFiniteDimensionalError(
                f"Completion exceeded {max_rules} rules", witness=rule.lead
            )
        schedule(rule.lead.arrows)

    # Inter-reduce tails so the system is canonical.
    final = RewriteSystem(quiver, field)
    for rule in system.rules:
        final._insert(rule)
    for word, rule in list(final._rules.items()):
        final._rules[word] = RewriteRule(rule.lead, final.reduce(rule.tail))

    logger.info(
        "Completed rewriting system",
        extra={"rules": len(final), "steps": steps, "arrows": len(quiver.arrows)},
    )
    return final


def _contains(word: tuple[str, ...], sub: tuple[str, ...]) -> bool:
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))


__all__ = ["RewriteRule", "RewriteSystem", "complete_rules"]
