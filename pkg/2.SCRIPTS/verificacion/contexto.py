# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 1: Instancias del corpus y contexto de evaluación
==============================================================================

Descripción:
    Una instancia es un par (anillo, módulo) descrito por texto, con
    submódulos y subconjuntos con nombre opcionales. Al resolverla se
    construyen las estructuras validadas y se crea un InstanceContext
    que guarda en caché todo lo que las propiedades consultan varias
    veces: retículos, radicales, conjuntos weakly J, productos de
    submódulos, localizaciones, idealización y familias de
    homomorfismos.

    Los casos que generan las propiedades son diccionarios con listas de
    índices; el contexto los vuelve a convertir en Ideal / Submodule con
    ctx.sub() y ctx.ideal().

Identificador:
    md5 del JSON canónico de los descriptores, 12 caracteres.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import hashlib
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import constructions
import module_core
import predicates
import ring_core
from constructions import (
    IdealizationRing,
    LocalizedStructure,
    idealization,
    jacobson_hypothesis_holds,
    localization,
    localize_module,
    multiplicative_closure,
)
from descriptores import (
    format_module_spec,
    format_ring_spec,
    parse_module_spec,
    parse_ring_spec,
)
from errores import BudgetExceededError, CapExceededError
from module_core import (
    FiniteModule,
    ModuleHom,
    StructureFlags,
    Submodule,
    colon_into_module,
    construct_module,
    cyclic_submodule,
    enumerate_homs,
    enumerate_submodules,
    ideal_action,
    inclusion_hom,
    module_jacobson as core_module_jacobson,
    projection_hom,
    structure_flags,
    submodule_generated,
    submodule_product,
)
from predicates import (
    check_j_presimplifiable,
    is_j_ideal,
    is_j_submodule,
    is_weakly_j_ideal,
    is_weakly_j_submodule,
    jacobson_threshold,
)
from ring_core import (
    FiniteRing,
    Ideal,
    construct_ring,
    enumerate_ideals,
    jacobson_radical,
)

logger = logging.getLogger("JModLab.contexto")

DEFAULT_INSTANCE_ORDER = 36
RESOLVED_INSTANCES = 128


# ==============================================================================
# INSTANCIAS
# ==============================================================================

@dataclass(frozen=True)
class Instance:
    """Descriptores canónicos de una instancia del corpus."""

    name: str
    ring_spec: str
    module_spec: str = "self"
    submodules: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()
    subsets: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()

    @classmethod
    def from_specs(
        cls,
        name: str,
        ring_spec: str,
        module_spec: str = "self",
        submodules: Optional[Dict[str, Iterable[int]]] = None,
        subsets: Optional[Dict[str, Iterable[int]]] = None,
    ) -> "Instance":
        """
        Normaliza los descriptores a su forma canónica.

        Raises:
            SpecParseError: si algún descriptor no sigue la gramática
        """
        return cls(
            name=name,
            ring_spec=format_ring_spec(parse_ring_spec(ring_spec)),
            module_spec=format_module_spec(parse_module_spec(module_spec)),
            submodules=tuple(
                (k, tuple(int(g) for g in v)) for k, v in sorted((submodules or {}).items())
            ),
            subsets=tuple(
                (k, tuple(sorted({int(s) for s in v}))) for k, v in sorted((subsets or {}).items())
            ),
        )

    @property
    def canonical(self) -> Dict:
        return {
            "anillo": self.ring_spec,
            "modulo": self.module_spec,
            "submodulos": {k: list(v) for k, v in self.submodules},
            "subconjuntos": {k: list(v) for k, v in self.subsets},
        }

    @property
    def instance_id(self) -> str:
        payload = json.dumps(self.canonical, sort_keys=True, separators=(",", ":"))
        return hashlib.md5(payload.encode("utf-8")).hexdigest()[:12]


@dataclass(frozen=True)
class InstanceCaps:
    """Límites de orden para anillo y módulo de cada instancia."""

    max_ring: int = DEFAULT_INSTANCE_ORDER
    max_module: int = DEFAULT_INSTANCE_ORDER


@dataclass(frozen=True)
class LocalizationCase:
    """Un conjunto S del barrido de localización, ya construido."""

    S: Tuple[int, ...]
    ring: LocalizedStructure
    module: LocalizedStructure
    jacobson_ok: bool


# ==============================================================================
# CONTEXTO
# ==============================================================================

@dataclass(eq=False)
class InstanceContext:
    """
    Estructuras resueltas de una instancia y cachés de evaluación.

    Las propiedades con cached_property se calculan la primera vez que
    alguna propiedad del registro las pide.
    """

    instance: Instance
    R: FiniteRing
    M: FiniteModule
    notes: List[str] = field(default_factory=list)
    _products: Dict = field(default_factory=dict, repr=False)
    _residuals: Dict = field(default_factory=dict, repr=False)
    _hom_flags: Dict = field(default_factory=dict, repr=False)

    # ─── retículos ───

    @cached_property
    def ideals(self) -> Tuple[Ideal, ...]:
        return enumerate_ideals(self.R)

    @cached_property
    def proper_ideals(self) -> Tuple[Ideal, ...]:
        return tuple(I for I in self.ideals if not I.is_whole)

    @cached_property
    def submodules(self) -> Tuple[Submodule, ...]:
        return enumerate_submodules(self.M)

    @cached_property
    def proper(self) -> Tuple[Submodule, ...]:
        return tuple(N for N in self.submodules if not N.is_whole)

    @cached_property
    def _sub_index(self) -> Dict:
        return {N.members: N for N in self.submodules}

    @cached_property
    def _ideal_index(self) -> Dict:
        return {I.members: I for I in self.ideals}

    def sub(self, members: Iterable[int]) -> Submodule:
        key = frozenset(int(x) for x in members)
        found = self._sub_index.get(key)
        return found if found is not None else Submodule(self.M, key)

    def ideal(self, members: Iterable[int]) -> Ideal:
        key = frozenset(int(x) for x in members)
        found = self._ideal_index.get(key)
        return found if found is not None else Ideal(self.R, key)

    # ─── radicales y estructura ───

    @cached_property
    def jacobson(self) -> Ideal:
        return jacobson_radical(self.R)

    @cached_property
    def threshold(self) -> Ideal:
        """(J(R)M : M)."""
        return jacobson_threshold(self.M)

    @cached_property
    def jm(self) -> Submodule:
        """J(R)M."""
        return ideal_action(self.jacobson, self.M)

    @cached_property
    def module_jacobson(self) -> Submodule:
        """J(M) con la comprobación J(M) = J(R)M del núcleo."""
        return self.sub(core_module_jacobson(self.M).members)

    @cached_property
    def flags(self) -> StructureFlags:
        return structure_flags(self.M)

    @cached_property
    def faithful_multiplication(self) -> bool:
        return self.flags.faithful and self.flags.multiplication

    @property
    def fgfm(self) -> bool:
        """Finitamente generado (siempre, M finito), fiel y de multiplicación."""
        return self.flags.finitely_generated and self.faithful_multiplication

    @cached_property
    def presimplifiable(self) -> bool:
        return check_j_presimplifiable(self.M).holds

    # ─── predicados con caché ───

    @cached_property
    def weakly_j(self) -> Tuple[Submodule, ...]:
        return tuple(N for N in self.proper if is_weakly_j_submodule(N))

    @cached_property
    def weakly_j_ideals(self) -> Tuple[Ideal, ...]:
        return tuple(I for I in self.proper_ideals if is_weakly_j_ideal(I))

    def is_wj(self, N: Submodule) -> bool:
        return is_weakly_j_submodule(N)

    def is_j(self, N: Submodule) -> bool:
        return is_j_submodule(N)

    def is_wj_ideal(self, I: Ideal) -> bool:
        return is_weakly_j_ideal(I)

    def is_j_ideal(self, I: Ideal) -> bool:
        return is_j_ideal(I)

    # ─── productos y residuales ───

    def product(self, N: Submodule, K: Submodule) -> Submodule:
        """NK en un módulo de multiplicación (caché por par)."""
        key = (N.members, K.members)
        if key not in self._products:
            self._products[key] = submodule_product(N, K)
        return self._products[key]

    @cached_property
    def element_products(self) -> Tuple[Tuple[int, int, Submodule], ...]:
        """(m1, m2, m1·m2) para todo par de elementos."""
        table = []
        for m1 in self.M.elements:
            C1 = cyclic_submodule(self.M, m1)
            for m2 in self.M.elements:
                table.append((m1, m2, self.product(C1, cyclic_submodule(self.M, m2))))
        return tuple(table)

    def residual(self, N: Submodule, X: Iterable[int]) -> Submodule:
        """(N :_M X) para X ⊆ R."""
        X = tuple(sorted({int(x) for x in X}))
        key = (N.members, X)
        if key not in self._residuals:
            self._residuals[key] = self.sub(colon_into_module(N, X).members)
        return self._residuals[key]

    # ─── corpus ───

    @cached_property
    def named_submodules(self) -> Dict[str, Submodule]:
        return {
            name: self.sub(submodule_generated(self.M, gens).members)
            for name, gens in self.instance.submodules
        }

    # ─── localización ───

    @cached_property
    def localizations(self) -> Tuple[LocalizationCase, ...]:
        """
        Barrido de S: cierres multiplicativos de cada singleton y de cada
        subconjunto con nombre; se descartan los que contienen 0.
        """
        seeds = [(s,) for s in self.R.elements] + [v for _, v in self.instance.subsets]
        closures = set()
        for seed in seeds:
            S = multiplicative_closure(self.R, seed)
            if 0 not in S:
                closures.add(tuple(sorted(S)))

        cases = []
        for S in sorted(closures, key=lambda t: (len(t), t)):
            loc = localization(self.R, frozenset(S))
            loc_m = localize_module(self.M, frozenset(S), loc)
            cases.append(LocalizationCase(S, loc, loc_m, jacobson_hypothesis_holds(loc)))
        logger.debug(
            f"{self.instance.name}: {len(cases)} conjuntos S, "
            f"{sum(c.jacobson_ok for c in cases)} con S⁻¹J(R) = J(S⁻¹R)"
        )
        return tuple(cases)

    # ─── idealización ───

    @cached_property
    def idealization(self) -> IdealizationRing:
        return idealization(self.R, self.M)

    # ─── homomorfismos ───

    @cached_property
    def hom_families(self) -> Tuple[Tuple[Dict, ModuleHom], ...]:
        """
        Endomorfismos de M (si caben en el presupuesto), proyecciones
        M → M/L e inclusiones L → M para cada L propio no nulo.
        """
        families: List[Tuple[Dict, ModuleHom]] = []
        try:
            for i, phi in enumerate(enumerate_homs(self.M, self.M)):
                families.append(({"tipo": "endo", "indice": i}, phi))
        except BudgetExceededError as e:
            self.notes.append(f"endomorfismos omitidos: {e}")
            logger.warning(f"  ⚠ {self.instance.name}: {e}")
        for L in self.proper:
            if L.is_zero:
                continue
            families.append(({"tipo": "proyeccion", "L": list(L.sorted_members)}, projection_hom(self.M, L)))
        for L in self.proper:
            if L.is_zero:
                continue
            families.append(({"tipo": "inclusion", "L": list(L.sorted_members)}, inclusion_hom(L)))
        return tuple(families)

    @cached_property
    def _hom_index(self) -> Dict[str, ModuleHom]:
        return {hom_key(d): phi for d, phi in self.hom_families}

    def hom(self, descriptor: Dict) -> ModuleHom:
        key = hom_key(descriptor)
        if key in self._hom_index:
            return self._hom_index[key]
        if descriptor["tipo"] == "proyeccion":
            return projection_hom(self.M, self.sub(descriptor["L"]))
        if descriptor["tipo"] == "inclusion":
            return inclusion_hom(self.sub(descriptor["L"]))
        raise KeyError(f"homomorfismo desconocido: {key}")

    def hom_flags(self, descriptor: Dict) -> Tuple[bool, bool, frozenset]:
        """(inyectivo, sobreyectivo, núcleo) con caché."""
        key = hom_key(descriptor)
        if key not in self._hom_flags:
            phi = self.hom(descriptor)
            image_size = len(set(phi.images))
            kernel = frozenset(m for m, y in enumerate(phi.images) if y == 0)
            self._hom_flags[key] = (
                image_size == phi.source.order,
                image_size == phi.target.order,
                kernel,
            )
        return self._hom_flags[key]


def hom_key(descriptor: Dict) -> str:
    return json.dumps(descriptor, sort_keys=True, separators=(",", ":"))


# ==============================================================================
# RESOLUCIÓN
# ==============================================================================

@lru_cache(maxsize=RESOLVED_INSTANCES)
def resolve_instance(instance: Instance, caps: InstanceCaps = InstanceCaps()) -> InstanceContext:
    """
    Construye anillo y módulo de la instancia bajo los límites dados.

    Raises:
        SpecParseError, ConstructionError: descriptores inválidos
        CapExceededError: anillo o módulo por encima del límite
    """
    R = construct_ring(instance.ring_spec)
    if R.order > caps.max_ring:
        raise CapExceededError(
            f"{instance.name}: |R| = {R.order} supera el límite {caps.max_ring}"
        )
    M = construct_module(R, instance.module_spec)
    if M.order > caps.max_module:
        raise CapExceededError(
            f"{instance.name}: |M| = {M.order} supera el límite {caps.max_module}"
        )
    logger.debug(f"Instancia resuelta: {instance.name} (|R| = {R.order}, |M| = {M.order})")
    return InstanceContext(instance, R, M)


def clear_caches() -> None:
    """
    Vacía todas las cachés por identidad (anillos, módulos, submódulos e
    instancias resueltas). run_corpus y hunt_counterexample la llaman al
    empezar, de modo que la memoria queda acotada por un solo corpus.
    """
    for module in (ring_core, module_core, constructions, predicates):
        module.clear_caches()
    resolve_instance.cache_clear()
    logger.debug("Cachés vaciadas")
