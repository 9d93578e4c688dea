# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 0: Jerarquía de excepciones
==============================================================================

Descripción:
    Excepciones compartidas por el núcleo algebraico y el arnés de
    verificación. Todas heredan de ValueError para que la CLI pueda
    mapearlas al código de salida 2 sin conocer cada caso.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""


class AlgebraError(ValueError):
    """Error base del laboratorio."""


class ConstructionError(AlgebraError):
    """Descriptor inválido, axioma violado o anillo nulo."""


class CapExceededError(ConstructionError):
    """La estructura supera el límite de orden configurado."""


class PreconditionError(AlgebraError):
    """Entrada fuera del dominio de la operación (p. ej. N = M)."""


class ConsistencyError(AlgebraError):
    """Dos cálculos independientes de la misma magnitud no coinciden."""


class BudgetExceededError(AlgebraError):
    """La enumeración solicitada supera el presupuesto de candidatos."""


class SpecParseError(AlgebraError):
    """Error de sintaxis en un descriptor de anillo o módulo."""


class CorpusError(AlgebraError):
    """Archivo de corpus ilegible o con instancias inválidas."""
