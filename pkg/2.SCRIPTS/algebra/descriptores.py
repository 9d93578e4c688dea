# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 0.1: Descriptores de anillos y módulos
==============================================================================

Descripción:
    Analizador de la sintaxis textual con la que el corpus y la CLI
    describen estructuras. El resultado es un árbol de tuplas (hashable y
    serializable con pickle) que ring_core y module_core saben construir.

    Anillos:
    ────────
    zn(n)                       → ("zn", n)
    product(R1, R2, ...)        → ("product", (R1, R2, ...))
    quotient(R, [g1, ...])      → ("quotient", R, (g1, ...))
    idealization(R, M)          → ("idealization", R, M)
    localization(R, [s1, ...])  → ("localization", R, (s1, ...))

    Módulos:
    ────────
    self                        → ("self",)
    cyclic(d) | Z_d | Zd        → ("cyclic", d)
    product(M1, M2, ...)        → ("product", (M1, M2, ...))
    quotient(M, [g1, ...])      → ("quotient", M, (g1, ...))
    submodule(M, [g1, ...])     → ("submodule", M, (g1, ...))

    Los generadores son índices canónicos de la estructura interior.

Uso:
    node = parse_ring_spec("quotient(zn(12), [4])")
    format_ring_spec(node)  # → "quotient(zn(12),[4])"

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import re
from typing import List, Tuple

from errores import SpecParseError


# ==============================================================================
# CONFIGURACIÓN
# ==============================================================================

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_CYCLIC_ALIAS_RE = re.compile(r"Z_?(\d+)")

RING_KINDS = ("zn", "product", "quotient", "idealization", "localization")
MODULE_KINDS = ("self", "cyclic", "product", "quotient", "submodule")


# ==============================================================================
# ANALIZADOR
# ==============================================================================

def _tokenize(text: str) -> List[Tuple[str, str]]:
    """Divide el texto en tokens (tipo, valor)."""
    tokens = []
    for number, name, symbol in _TOKEN_RE.findall(text):
        if number:
            tokens.append(("int", number))
        elif name:
            tokens.append(("name", name))
        elif symbol:
            if symbol not in "()[],":
                raise SpecParseError(f"carácter inesperado '{symbol}' en '{text}'")
            tokens.append(("sym", symbol))
    return tokens


class _SpecParser:
    """Descenso recursivo sobre la lista de tokens."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    # ─── utilidades ───

    def _peek(self) -> Tuple[str, str]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("eof", "")

    def _next(self) -> Tuple[str, str]:
        token = self._peek()
        self.pos += 1
        return token

    def _expect(self, value: str) -> None:
        kind, got = self._next()
        if got != value:
            shown = got or "fin de texto"
            raise SpecParseError(
                f"se esperaba '{value}' y se encontró '{shown}' en '{self.text}'"
            )

    def _integer(self) -> int:
        kind, value = self._next()
        if kind != "int":
            raise SpecParseError(
                f"se esperaba un entero y se encontró '{value}' en '{self.text}'"
            )
        return int(value)

    def _int_list(self) -> Tuple[int, ...]:
        self._expect("[")
        values = []
        if self._peek()[1] != "]":
            values.append(self._integer())
            while self._peek()[1] == ",":
                self._next()
                values.append(self._integer())
        self._expect("]")
        return tuple(values)

    def finish(self) -> None:
        if self.pos != len(self.tokens):
            raise SpecParseError(
                f"texto sobrante tras el descriptor en '{self.text}'"
            )

    # ─── gramática ───

    def ring(self) -> tuple:
        kind, name = self._next()
        if kind != "name" or name not in RING_KINDS:
            raise SpecParseError(f"tipo de anillo desconocido '{name}' en '{self.text}'")
        self._expect("(")
        if name == "zn":
            node = ("zn", self._integer())
        elif name == "product":
            factors = [self.ring()]
            while self._peek()[1] == ",":
                self._next()
                factors.append(self.ring())
            node = ("product", tuple(factors))
        elif name == "idealization":
            base = self.ring()
            self._expect(",")
            node = ("idealization", base, self.module())
        else:
            base = self.ring()
            self._expect(",")
            node = (name, base, self._int_list())
        self._expect(")")
        return node

    def module(self) -> tuple:
        kind, name = self._next()
        if kind != "name":
            raise SpecParseError(f"se esperaba un módulo y se encontró '{name}' en '{self.text}'")
        alias = _CYCLIC_ALIAS_RE.fullmatch(name)
        if alias:
            return ("cyclic", int(alias.group(1)))
        if name == "self":
            return ("self",)
        if name not in MODULE_KINDS:
            raise SpecParseError(f"tipo de módulo desconocido '{name}' en '{self.text}'")
        self._expect("(")
        if name == "cyclic":
            node = ("cyclic", self._integer())
        elif name == "product":
            factors = [self.module()]
            while self._peek()[1] == ",":
                self._next()
                factors.append(self.module())
            node = ("product", tuple(factors))
        else:
            inner = self.module()
            self._expect(",")
            node = (name, inner, self._int_list())
        self._expect(")")
        return node


def parse_ring_spec(text: str) -> tuple:
    """
    Convierte un descriptor textual de anillo en árbol de tuplas.

    Raises:
        SpecParseError: si el texto no sigue la gramática
    """
    parser = _SpecParser(text)
    node = parser.ring()
    parser.finish()
    return node


def parse_module_spec(text: str) -> tuple:
    """Igual que parse_ring_spec, para descriptores de módulo."""
    parser = _SpecParser(text)
    node = parser.module()
    parser.finish()
    return node


# ==============================================================================
# FORMATO CANÓNICO
# ==============================================================================

def _format_list(values: Tuple[int, ...]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def format_ring_spec(node: tuple) -> str:
    """Forma canónica (sin espacios) de un árbol de anillo."""
    kind = node[0]
    if kind == "zn":
        return f"zn({node[1]})"
    if kind == "product":
        return "product(" + ",".join(format_ring_spec(f) for f in node[1]) + ")"
    if kind == "idealization":
        return f"idealization({format_ring_spec(node[1])},{format_module_spec(node[2])})"
    return f"{kind}({format_ring_spec(node[1])},{_format_list(node[2])})"


def format_module_spec(node: tuple) -> str:
    """Forma canónica (sin espacios) de un árbol de módulo."""
    kind = node[0]
    if kind == "self":
        return "self"
    if kind == "cyclic":
        return f"cyclic({node[1]})"
    if kind == "product":
        return "product(" + ",".join(format_module_spec(f) for f in node[1]) + ")"
    return f"{kind}({format_module_spec(node[1])},{_format_list(node[2])})"
