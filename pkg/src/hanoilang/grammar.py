"""Generic context-free grammar types and derivation engines.

Symbols are terminal/nonterminal tags around opaque, hashable payloads;
the engines never look inside a payload. Derivation is leftmost: when a
form has several nonterminals, the leftmost one is rewritten, and when a
nonterminal has several productions, the first registered one is applied.
Language enumeration explores every rewrite position and production, so
it is not limited to the leftmost strategy.
"""

from dataclasses import dataclass
from typing import Any, Callable

TERMINAL = "terminal"
NONTERMINAL = "nonterminal"

# Longest sentential form derive_full will materialize (~16M symbols).
MAX_FORM_SYMBOLS = 1 << 24


class GrammarError(ValueError):
    """Malformed grammar detected at construction time."""


class NoApplicableProduction(RuntimeError):
    """A leftmost nonterminal exists but no production rewrites it."""


class StepLimitExceeded(RuntimeError):
    """Derivation did not finish within the allowed number of rewrites."""


class FormTooLarge(RuntimeError):
    """The sentential form outgrew the materialization cap."""


@dataclass(frozen=True)
class Symbol:
    """Tagged grammar symbol. Equal iff tag and payload are both equal."""

    kind: str
    payload: Any

    def __post_init__(self):
        if self.kind not in (TERMINAL, NONTERMINAL):
            raise GrammarError(f"unknown symbol kind {self.kind!r}")

    @property
    def is_terminal(self) -> bool:
        return self.kind == TERMINAL

    def __str__(self) -> str:
        return str(self.payload)


def terminal(payload) -> Symbol:
    return Symbol(TERMINAL, payload)


def nonterminal(payload) -> Symbol:
    return Symbol(NONTERMINAL, payload)


# A sentential form is a plain tuple of symbols; () is the empty word.
SententialForm = tuple[Symbol, ...]


def format_form(form) -> str:
    """Render a form as space-separated payload text; the empty form is 'ε'."""
    return " ".join(str(sym) for sym in form) if form else "ε"


@dataclass(frozen=True)
class Production:
    """Rewrite rule lhs -> rhs with a single nonterminal on the left."""

    lhs: Symbol
    rhs: SententialForm

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if self.lhs.is_terminal:
            raise GrammarError(f"production lhs must be a nonterminal, got {self.lhs}")

    def __str__(self) -> str:
        return f"{self.lhs} -> {format_form(self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    """Immutable grammar with an insertion-ordered production index by lhs."""

    terminals: frozenset
    nonterminals: frozenset
    start: Symbol
    productions: tuple

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "productions", tuple(self.productions))
        for sym in self.terminals:
            if not sym.is_terminal:
                raise GrammarError(f"{sym} is tagged nonterminal but listed as terminal")
        for sym in self.nonterminals:
            if sym.is_terminal:
                raise GrammarError(f"{sym} is tagged terminal but listed as nonterminal")
        shared = {s.payload for s in self.terminals} & {s.payload for s in self.nonterminals}
        if shared:
            raise GrammarError(
                "payloads used as both terminal and nonterminal: "
                + ", ".join(sorted(map(str, shared)))
            )
        if self.start not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start} is not a listed nonterminal")
        vocabulary = self.terminals | self.nonterminals
        index: dict[Symbol, list] = {}
        for prod in self.productions:
            if prod.lhs not in self.nonterminals:
                raise GrammarError(f"production lhs {prod.lhs} is not a listed nonterminal")
            for sym in prod.rhs:
                if sym not in vocabulary:
                    raise GrammarError(f"production {prod} uses unknown symbol {sym}")
            index.setdefault(prod.lhs, []).append(prod)
        object.__setattr__(
            self, "_by_lhs", {lhs: tuple(prods) for lhs, prods in index.items()}
        )

    def productions_for(self, sym: Symbol) -> tuple:
        """Productions with this lhs, in registration order."""
        return self._by_lhs.get(sym, ())


@dataclass(frozen=True)
class Derivation:
    """A finished leftmost derivation: the terminal word (as payloads,
    leftmost first) and the number of direct derivations it took."""

    word: tuple
    steps: int


def derive_step(grammar: Grammar, form) -> SententialForm | None:
    """One direct derivation at the leftmost nonterminal.

    Returns the rewritten form, or None when the form is all-terminal and
    no rewrite is possible. Applies the first registered production of the
    leftmost nonterminal.
    """
    for i, sym in enumerate(form):
        if not sym.is_terminal:
            options = grammar.productions_for(sym)
            if not options:
                raise NoApplicableProduction(f"no production rewrites {sym}")
            return tuple(form[:i]) + options[0].rhs + tuple(form[i + 1 :])
    return None


def derive_full(grammar: Grammar, step_limit: int, max_form_symbols=MAX_FORM_SYMBOLS) -> Derivation:
    """Leftmost rewrites from the start symbol until only terminals remain.

    Materializes the whole word, so the form length is capped (pass
    max_form_symbols=None to lift the cap). The form is rewritten in place;
    the rewrite choice at each step is exactly derive_step's.
    """
    if step_limit < 1:
        raise ValueError(f"step_limit must be >= 1, got {step_limit}")
    rhs_of = {lhs: prods[0].rhs for lhs, prods in grammar._by_lhs.items()}
    form: list = [grammar.start]
    cursor = 0  # symbols left of cursor are terminal and can never change again
    steps = 0
    while True:
        size = len(form)
        while cursor < size and form[cursor].is_terminal:
            cursor += 1
        if cursor == size:
            return Derivation(tuple(sym.payload for sym in form), steps)
        if steps >= step_limit:
            raise StepLimitExceeded(f"derivation exceeded {step_limit} rewrites")
        rhs = rhs_of.get(form[cursor])
        if rhs is None:
            raise NoApplicableProduction(f"no production rewrites {form[cursor]}")
        if max_form_symbols is not None and size - 1 + len(rhs) > max_form_symbols:
            raise FormTooLarge(
                f"sentential form would exceed {max_form_symbols} symbols"
            )
        form[cursor : cursor + 1] = rhs
        steps += 1


def derive_streaming(grammar: Grammar, sink: Callable[[Any], None], step_limit: int) -> int:
    """Leftmost derivation that hands each terminal payload to sink as soon
    as the terminal becomes the leftmost symbol.

    Runs the pending part of the form as a work stack, so memory stays
    proportional to the rewrite depth instead of the word length. Emits the
    same sequence as derive_full. Returns the number of terminals emitted.
    """
    if step_limit < 1:
        raise ValueError(f"step_limit must be >= 1, got {step_limit}")
    rhs_of = {lhs: prods[0].rhs for lhs, prods in grammar._by_lhs.items()}
    pending: list = [grammar.start]  # leftmost symbol kept at the end
    emitted = 0
    steps = 0
    while pending:
        sym = pending.pop()
        if sym.is_terminal:
            sink(sym.payload)
            emitted += 1
            continue
        if steps >= step_limit:
            raise StepLimitExceeded(f"derivation exceeded {step_limit} rewrites")
        rhs = rhs_of.get(sym)
        if rhs is None:
            raise NoApplicableProduction(f"no production rewrites {sym}")
        pending.extend(reversed(rhs))
        steps += 1
    return emitted


def enumerate_language(grammar: Grammar, max_derivation_length: int) -> set:
    """Every terminal word reachable within the given number of direct
    derivations, exploring all rewrite positions and all productions.

    Breadth-first over sentential forms with global deduplication; words
    are returned as tuples of terminal payloads. Nonterminals without
    productions simply dead-end their branch.
    """
    if max_derivation_length < 1:
        raise ValueError(f"bound must be >= 1, got {max_derivation_length}")
    start: SententialForm = (grammar.start,)
    seen = {start}
    frontier = [start]
    words = set()
    for _ in range(max_derivation_length):
        successors = []
        for form in frontier:
            for i, sym in enumerate(form):
                if sym.is_terminal:
                    continue
                for prod in grammar.productions_for(sym):
                    rewritten = form[:i] + prod.rhs + form[i + 1 :]
                    if rewritten in seen:
                        continue
                    seen.add(rewritten)
                    if all(s.is_terminal for s in rewritten):
                        words.add(tuple(s.payload for s in rewritten))
                    else:
                        successors.append(rewritten)
        if not successors:
            break
        frontier = successors
    return words
