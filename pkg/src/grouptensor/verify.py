"""Exact evaluation of every degree statement over a corpus of small groups.

Each named check evaluates one published-style statement (an inequality or
equality between exact rationals) on every applicable instance drawn from a
corpus entry: all subgroups, all normal subgroups with the required
containments, and a configurable range of degree indices.  Checks are
evaluations, not axioms: a violated statement is reported with a complete
witness instead of aborting, while structural inconsistencies (a tensor
centralizer failing to be a subgroup, say) raise hard errors.  Reports are
deterministic: identical inputs serialize to identical bytes, regardless of
worker count.
"""

from __future__ import annotations

import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .degrees import (
    format_decimal,
    format_fraction,
    rel_comm_degree,
    rel_n_tensor_degree,
    tensor_degree,
)
from .errors import LimitError, SpecError
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    all_subgroups,
    center,
    commutator_subgroup,
    full_subgroup,
    image_subgroup,
    nilpotency_class,
    normal_subgroups,
    quotient,
    smallest_prime_divisor,
    subgroup_as_group,
    subgroup_generated,
)
from .specs import group_from_spec, subgroup_from_words
from .tensor import (
    TensorSquareData,
    j2_order,
    tensor_center,
    tensor_class,
    tensor_square,
    tensor_upper_central,
)
from .version import __version__

DISCREPANCY_NOTE = "paper-example-discrepancy"

# Checks that never touch the tensor square; they survive an enumeration
# overflow of the entry's tensor square.
TENSOR_FREE_IDS = frozenset({"thm-1.1", "sanity-erl", "sanity-lescot"})

THEOREM_IDS = (
    "thm-1.1",
    "thm-1.2",
    "thm-1.3",
    "lem-2.1",
    "thm-2.2",
    "thm-2.3",
    "thm-2.5",
    "thm-2.6",
    "lem-2.7",
    "thm-2.8",
    "thm-3cases",
    "thm-quot",
    "sanity-erl",
    "sanity-lescot",
)
EXAMPLE_IDS = ("ex-3.1", "ex-3.2", "ex-3.3")
ALL_CHECK_IDS = THEOREM_IDS + EXAMPLE_IDS


@dataclass(frozen=True)
class Config:
    """Suite configuration; the computation-relevant fields are echoed into reports."""

    max_cosets: int = 1_000_000
    max_order: int = 16
    n_values: tuple[int, ...] = (1, 2, 3, 4)
    fmt: str = "json"
    jobs: int = 1
    out: Optional[str] = None

    def __post_init__(self) -> None:
        if self.max_cosets < 1 or self.max_order < 1 or self.jobs < 1:
            raise SpecError("config bounds must be positive")
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise SpecError("n range must be positive")
        if self.fmt not in ("json", "csv", "table"):
            raise SpecError(f"unknown output format {self.fmt!r}")

    def echo(self) -> dict:
        # jobs and the output path steer execution, not the computation, and
        # reports must be byte-identical across worker counts
        return {
            "max_cosets": self.max_cosets,
            "max_order": self.max_order,
            "n_values": list(self.n_values),
            "format": self.fmt,
        }


@dataclass
class CorpusEntry:
    """One corpus group; the tensor square is filled in lazily per process."""

    spec: str
    group: FiniteGroup
    tensor: Optional[TensorSquareData] = None
    status: str = "pending"

    def ensure_tensor(self, config: Optional["Config"] = None) -> Optional[TensorSquareData]:
        """Populate the tensor field, recording an exceeded-limit marker instead
        of raising when the enumeration overflows."""
        if self.status == "pending":
            max_cosets = (config or Config()).max_cosets
            try:
                self.tensor = tensor_square(self.group, max_cosets=max_cosets)
                self.status = "ok"
            except LimitError:
                self.tensor = None
                self.status = "exceeded-limit"
        return self.tensor


BUILTIN_SPECS = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3",
    "D8", "D10", "D12", "D14", "D16",
    "Q8", "Q16",
    "S3", "A4", "S4",
)


def builtin_corpus(max_order: int) -> list[CorpusEntry]:
    """The fixed corpus, filtered to groups of order at most ``max_order``."""
    if max_order < 1:
        raise SpecError("max_order must be >= 1")
    entries = []
    for spec in BUILTIN_SPECS:
        group = group_from_spec(spec)
        if group.order <= max_order:
            entries.append(CorpusEntry(spec=spec, group=group))
    return entries


def corpus_from_file(path: str, max_order: int) -> list[CorpusEntry]:
    """One spec per line; '#' starts a comment."""
    entries = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            group = group_from_spec(text)
            if group.order <= max_order:
                entries.append(CorpusEntry(spec=text, group=group))
    return entries


@dataclass(frozen=True)
class TheoremCheck:
    """One evaluated instance: exact sides, verdict, and violation witness."""

    id: str
    group: str
    subgroup: Optional[tuple[int, ...]] = None
    normal: Optional[tuple[int, ...]] = None
    n: Optional[int] = None
    variant: Optional[str] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    relation: str = "le"
    holds: Optional[bool] = None
    skipped: bool = False
    note: Optional[str] = None
    witness: Optional[dict] = None

    def sort_key(self) -> tuple:
        return (
            self.id,
            self.group,
            self.subgroup or (),
            self.normal or (),
            self.n if self.n is not None else -1,
            self.variant or "",
        )

    def to_dict(self) -> dict:
        out: dict = {"id": self.id, "group": self.group}
        if self.subgroup is not None:
            out["subgroup"] = list(self.subgroup)
        if self.normal is not None:
            out["normal"] = list(self.normal)
        if self.n is not None:
            out["n"] = self.n
        if self.variant is not None:
            out["variant"] = self.variant
        out["lhs"] = format_fraction(self.lhs) if self.lhs is not None else None
        out["lhs_decimal"] = format_decimal(self.lhs) if self.lhs is not None else None
        out["rhs"] = format_fraction(self.rhs) if self.rhs is not None else None
        out["rhs_decimal"] = format_decimal(self.rhs) if self.rhs is not None else None
        out["relation"] = self.relation
        out["holds"] = self.holds
        if self.skipped:
            out["skipped"] = True
        if self.note is not None:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _compare(relation: str, lhs: Fraction, rhs: Fraction) -> bool:
    return lhs <= rhs if relation == "le" else lhs == rhs


# ---------------------------------------------------------------------------
# Per-entry evaluation context
# ---------------------------------------------------------------------------


class EntryContext:
    """Shared artifacts for all checks on one corpus group."""

    def __init__(self, spec: str, group: FiniteGroup, config: Config) -> None:
        self.spec = spec
        self.group = group
        self.config = config
        self._tensor: Optional[TensorSquareData] = None
        self._degree_cache: dict[tuple[tuple[int, ...], int], Fraction] = {}
        self._plain_quotients: dict[tuple[int, ...], tuple] = {}
        self._tensor_quotients: dict[tuple[int, ...], tuple] = {}
        self._k_quotients: dict[tuple[int, ...], tuple] = {}
        self._hg_commutators: dict[tuple[int, ...], SubgroupHandle] = {}

    # -- tensor-square dependent artifacts --------------------------------

    @property
    def tensor(self) -> TensorSquareData:
        if self._tensor is None:
            self._tensor = tensor_square(self.group, max_cosets=self.config.max_cosets)
        return self._tensor

    @property
    def ztensor(self) -> SubgroupHandle:
        return tensor_center(self.group, self.tensor)

    @property
    def tclass(self) -> Optional[int]:
        return tensor_class(self.group, self.tensor)

    def zn_tensor(self, n: int) -> SubgroupHandle:
        return tensor_upper_central(self.group, self.tensor, n)

    def dn(self, h: SubgroupHandle, n: int) -> Fraction:
        key = (h.elements, n)
        hit = self._degree_cache.get(key)
        if hit is None:
            hit = rel_n_tensor_degree(self.group, self.tensor, h, n)
            self._degree_cache[key] = hit
        return hit

    def dn_full(self, n: int) -> Fraction:
        return self.dn(self.full, n)

    def d_tensor(self) -> Fraction:
        return tensor_degree(self.group, self.tensor)

    # -- plain group artifacts ---------------------------------------------

    @property
    def full(self) -> SubgroupHandle:
        return full_subgroup(self.group)

    @property
    def subgroups(self) -> list[SubgroupHandle]:
        return all_subgroups(self.group)

    @property
    def normals(self) -> list[SubgroupHandle]:
        return normal_subgroups(self.group)

    def handle(self, elems: Sequence[int]) -> SubgroupHandle:
        return SubgroupHandle(self.group, elems)

    def d_comm(self, h: SubgroupHandle) -> Fraction:
        return rel_comm_degree(self.group, h)

    def d_inner(self, h: SubgroupHandle) -> Fraction:
        """Commuting probability inside a subgroup, computed in the parent table."""
        mul = self.group.mul
        hits = sum(
            1 for a in h.elements for b in h.elements if mul[a][b] == mul[b][a]
        )
        return Fraction(hits, h.order * h.order)

    def hg_commutator(self, h: SubgroupHandle) -> SubgroupHandle:
        key = h.elements
        hit = self._hg_commutators.get(key)
        if hit is None:
            hit = commutator_subgroup(self.group, h, self.full)
            self._hg_commutators[key] = hit
        return hit

    def plain_quotient(self, n_handle: SubgroupHandle):
        """(Q, proj, image) without any tensor enumeration."""
        key = n_handle.elements
        hit = self._plain_quotients.get(key)
        if hit is None:
            q, proj = quotient(self.group, n_handle)
            hit = (q, proj)
            self._plain_quotients[key] = hit
        return hit

    def tensor_quotient(self, n_handle: SubgroupHandle):
        """(Q, proj, tensor square of Q); may raise LimitError."""
        key = n_handle.elements
        hit = self._tensor_quotients.get(key)
        if hit is None:
            q, proj = self.plain_quotient(n_handle)
            tq = tensor_square(q, max_cosets=self.config.max_cosets)
            hit = (q, proj, tq)
            self._tensor_quotients[key] = hit
        return hit

    def k_quotient(self, h: SubgroupHandle):
        """H / (H n Z-tensor) as a standalone group with its tensor square."""
        key = h.elements
        hit = self._k_quotients.get(key)
        if hit is None:
            zt = self.ztensor
            inter = sorted(set(h.elements) & zt._set)
            hgrp, embed = subgroup_as_group(h)
            pos = {e: i for i, e in enumerate(embed)}
            n_in_h = SubgroupHandle(hgrp, [pos[e] for e in inter])
            k, _ = quotient(hgrp, n_in_h)
            tk = tensor_square(k, max_cosets=self.config.max_cosets)
            hit = (k, tk)
            self._k_quotients[key] = hit
        return hit


# ---------------------------------------------------------------------------
# Instance generation and evaluation, one pair of functions per check id
# ---------------------------------------------------------------------------


def _frac(value: Fraction) -> str:
    return format_fraction(value)


def _gen_thm_1_1(ctx: EntryContext) -> list[dict]:
    out = []
    for h in ctx.subgroups:
        for n in ctx.normals:
            if n <= h:
                out.append({"subgroup": h.elements, "normal": n.elements})
    return out


def _eval_thm_1_1(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    n = ctx.handle(inst["normal"])
    lhs = ctx.d_comm(h)
    q, proj = ctx.plain_quotient(n)
    hq = image_subgroup(h, proj, q)
    rhs = rel_comm_degree(q, hq) * ctx.d_inner(n)
    hg = ctx.hg_commutator(h)
    equality_case = len(n._set & hg._set) == 1
    relation = "eq" if equality_case else "le"
    holds = _compare(relation, lhs, rhs)
    witness = None
    if not holds:
        witness = {
            "lhs": _frac(lhs),
            "rhs": _frac(rhs),
            "equality_case": equality_case,
        }
    return TheoremCheck(
        id="thm-1.1",
        group=ctx.spec,
        subgroup=h.elements,
        normal=n.elements,
        variant="equality" if equality_case else "inequality",
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        holds=holds,
        witness=witness,
    )


def _gen_thm_1_2(ctx: EntryContext) -> list[dict]:
    if ctx.group.order == 1:
        return []
    return [{"variant": "lower"}, {"variant": "upper"}]


def _eval_thm_1_2(ctx: EntryContext, inst: dict) -> TheoremCheck:
    group = ctx.group
    p = smallest_prime_divisor(group.order)
    assert p is not None
    d = ctx.d_comm(ctx.full)
    dt = ctx.d_tensor()
    j2 = j2_order(group, ctx.tensor)
    zt_order = ctx.ztensor.order
    z_order = center(group).order
    if inst["variant"] == "lower":
        lhs = d / j2 + Fraction(zt_order, group.order) * (1 - Fraction(1, j2))
        rhs = dt
    else:
        lhs = dt
        rhs = d - Fraction((p - 1) * (z_order - zt_order), p * group.order)
    holds = lhs <= rhs
    witness = None
    if not holds:
        witness = {
            "tensor_degree": _frac(dt),
            "comm_degree": _frac(d),
            "j2_order": j2,
            "center_order": z_order,
            "tensor_center_order": zt_order,
            "smallest_prime": p,
        }
    return TheoremCheck(
        id="thm-1.2",
        group=ctx.spec,
        variant=inst["variant"],
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_thm_1_3(ctx: EntryContext) -> list[dict]:
    if ctx.group.is_abelian() or ctx.ztensor.order != 1:
        return []
    return [{}]


def _eval_thm_1_3(ctx: EntryContext, inst: dict) -> TheoremCheck:
    p = smallest_prime_divisor(ctx.group.order)
    assert p is not None
    lhs = ctx.d_tensor()
    rhs = Fraction(1, p)
    holds = lhs <= rhs
    witness = {"smallest_prime": p} if not holds else None
    return TheoremCheck(
        id="thm-1.3",
        group=ctx.spec,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_lem_2_1(ctx: EntryContext) -> list[dict]:
    out = []
    group = ctx.group
    zt = ctx.ztensor
    mul = group.mul
    for h in ctx.subgroups:
        out.append({"subgroup": h.elements, "variant": "index-bound"})
        prod = {mul[a][z] for a in h.elements for z in zt.elements}
        if len(prod) == group.order:
            out.append({"subgroup": h.elements, "variant": "product-equality"})
    return out


def _lem_2_1_ratios(ctx: EntryContext, h: SubgroupHandle) -> list[Fraction]:
    group = ctx.group
    trivial = ctx.tensor.trivial
    ratios = []
    for x in group.elements():
        col = [a for a in group.elements() if trivial[a][x]]
        c_size = len(col)
        ch_size = len(set(col) & h._set)
        # [H : C n H] / [G : C]
        ratios.append(Fraction(h.order * c_size, ch_size * group.order))
    return ratios


def _eval_lem_2_1(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    ratios = _lem_2_1_ratios(ctx, h)
    one = Fraction(1)
    if inst["variant"] == "index-bound":
        worst = max(range(len(ratios)), key=lambda x: (ratios[x], -x))
        lhs, relation = ratios[worst], "le"
    else:
        worst = max(range(len(ratios)), key=lambda x: (abs(ratios[x] - one), -x))
        lhs, relation = ratios[worst], "eq"
    holds = _compare(relation, lhs, one)
    witness = {"x": worst, "ratio": _frac(ratios[worst])} if not holds else None
    return TheoremCheck(
        id="lem-2.1",
        group=ctx.spec,
        subgroup=h.elements,
        variant=inst["variant"],
        lhs=lhs,
        rhs=one,
        relation=relation,
        holds=holds,
        witness=witness,
    )


def _gen_per_subgroup_n(ctx: EntryContext) -> list[dict]:
    return [
        {"subgroup": h.elements, "n": n}
        for h in ctx.subgroups
        for n in ctx.config.n_values
    ]


def _eval_thm_2_2(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    n = inst["n"]
    lhs = ctx.dn(h, n)
    index = Fraction(ctx.group.order, h.order)
    rhs = index ** (n + 1) * ctx.dn_full(n)
    holds = lhs <= rhs
    witness = {"index": _frac(index), "dn_full": _frac(ctx.dn_full(n))} if not holds else None
    return TheoremCheck(
        id="thm-2.2",
        group=ctx.spec,
        subgroup=h.elements,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _eval_thm_2_3(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    n = inst["n"]
    lhs = ctx.dn(h, n + 1)
    k, tk = ctx.k_quotient(h)
    inner = rel_n_tensor_degree(k, tk, full_subgroup(k), n)
    rhs = Fraction(1, 2) * (1 + inner)
    holds = lhs <= rhs
    witness = None
    if not holds:
        witness = {
            "k_order": k.order,
            "k_degree": _frac(inner),
            "lhs_degree_index": n + 1,
        }
    return TheoremCheck(
        id="thm-2.3",
        group=ctx.spec,
        subgroup=h.elements,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_per_n(ctx: EntryContext) -> list[dict]:
    return [{"n": n} for n in ctx.config.n_values]


def _eval_thm_2_5(ctx: EntryContext, inst: dict) -> TheoremCheck:
    n = inst["n"]
    lhs = ctx.dn_full(n + 1)
    zn = ctx.zn_tensor(n)
    q, _, tq = ctx.tensor_quotient(zn)
    inner = tensor_degree(q, tq)
    rhs = Fraction(2**n - 1, 2**n) + inner / 2**n
    holds = lhs <= rhs
    witness = None
    if not holds:
        witness = {
            "zn_order": zn.order,
            "quotient_tensor_degree": _frac(inner),
            "lhs_degree_index": n + 1,
        }
    return TheoremCheck(
        id="thm-2.5",
        group=ctx.spec,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_thm_2_6(ctx: EntryContext) -> list[dict]:
    c = ctx.tclass
    return [{"n": n} for n in ctx.config.n_values if c is None or c > n]


def _eval_thm_2_6(ctx: EntryContext, inst: dict) -> TheoremCheck:
    n = inst["n"]
    c = ctx.tclass
    lhs = ctx.dn_full(n)
    rhs = Fraction(2 ** (n + 2) - 3, 2 ** (n + 2))
    holds = lhs <= rhs
    witness = {"tensor_class": c} if not holds else None
    return TheoremCheck(
        id="thm-2.6",
        group=ctx.spec,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_lem_2_7(ctx: EntryContext) -> list[dict]:
    c = ctx.tclass
    return [{"n": n} for n in ctx.config.n_values if c is not None and c <= n]


def _eval_lem_2_7(ctx: EntryContext, inst: dict) -> TheoremCheck:
    n = inst["n"]
    c = ctx.tclass
    nc = nilpotency_class(ctx.group)
    holds = nc is not None and nc <= n
    witness = None
    if not holds:
        witness = {"tensor_class": c, "nilpotency_class": nc}
    return TheoremCheck(
        id="lem-2.7",
        group=ctx.spec,
        n=n,
        lhs=Fraction(nc) if nc is not None else None,
        rhs=Fraction(n),
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_thm_2_8(ctx: EntryContext) -> list[dict]:
    if ctx.group.order == 1 or center(ctx.group).order != 1:
        return []
    return [{"n": n} for n in ctx.config.n_values]


def _eval_thm_2_8(ctx: EntryContext, inst: dict) -> TheoremCheck:
    n = inst["n"]
    lhs = ctx.dn_full(n)
    rhs = Fraction(2**n - 1, 2**n)
    holds = lhs <= rhs
    return TheoremCheck(
        id="thm-2.8",
        group=ctx.spec,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=None if holds else {"center_order": 1},
    )


def _gen_thm_3cases(ctx: EntryContext) -> list[dict]:
    return [
        {"subgroup": h.elements, "n": n}
        for h in ctx.subgroups
        if h.order < ctx.group.order
        for n in ctx.config.n_values
    ]


def _eval_thm_3cases(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    n = inst["n"]
    lhs = ctx.dn(h, n)
    zn = ctx.zn_tensor(n)
    witness_extra: dict = {}
    if set(h.elements) <= zn._set:
        variant = "case-i"
        rhs, relation = Fraction(1), "eq"
    else:
        k, tk = ctx.k_quotient(h)
        c = tensor_class(k, tk)
        witness_extra = {"k_order": k.order, "k_tensor_class": c}
        if c is not None and c <= n - 1:
            variant = "case-ii"
            rhs, relation = Fraction(1), "eq"
        else:
            variant = "case-iii"
            rhs, relation = Fraction(2 ** (n + 2) - 3, 2 ** (n + 2)), "le"
    holds = _compare(relation, lhs, rhs)
    witness = None
    if not holds:
        witness = {"case": variant, **witness_extra}
    return TheoremCheck(
        id="thm-3cases",
        group=ctx.spec,
        subgroup=h.elements,
        n=n,
        variant=variant,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        holds=holds,
        witness=witness,
    )


def _gen_thm_quot(ctx: EntryContext) -> list[dict]:
    out = []
    for h in ctx.subgroups:
        for nh in ctx.normals:
            if nh <= h:
                for n in ctx.config.n_values:
                    out.append(
                        {"subgroup": h.elements, "normal": nh.elements, "n": n}
                    )
    return out


def _eval_thm_quot(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    nh = ctx.handle(inst["normal"])
    n = inst["n"]
    lhs = ctx.dn(h, n)
    q, proj, tq = ctx.tensor_quotient(nh)
    hq = image_subgroup(h, proj, q)
    rhs = rel_n_tensor_degree(q, tq, hq, n)
    holds = lhs <= rhs
    witness = {"quotient_order": q.order} if not holds else None
    return TheoremCheck(
        id="thm-quot",
        group=ctx.spec,
        subgroup=h.elements,
        normal=nh.elements,
        n=n,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=holds,
        witness=witness,
    )


def _gen_sanity_erl(ctx: EntryContext) -> list[dict]:
    return [] if ctx.group.is_abelian() else [{}]


def _eval_sanity_erl(ctx: EntryContext, inst: dict) -> TheoremCheck:
    lhs = ctx.d_comm(ctx.full)
    rhs = Fraction(5, 8)
    return TheoremCheck(
        id="sanity-erl",
        group=ctx.spec,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=lhs <= rhs,
    )


def _gen_sanity_lescot(ctx: EntryContext) -> list[dict]:
    return [] if nilpotency_class(ctx.group) is not None else [{}]


def _eval_sanity_lescot(ctx: EntryContext, inst: dict) -> TheoremCheck:
    lhs = ctx.d_comm(ctx.full)
    rhs = Fraction(1, 2)
    return TheoremCheck(
        id="sanity-lescot",
        group=ctx.spec,
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=lhs <= rhs,
    )


def _gen_ex_3_1(ctx: EntryContext) -> list[dict]:
    if ctx.spec != "S3":
        return []
    out = [{"n": n, "variant": "bound"} for n in (1, 2, 3, 4)]
    out.append({"variant": "tensor-center-trivial"})
    return out


def _eval_ex_3_1(ctx: EntryContext, inst: dict) -> TheoremCheck:
    if inst["variant"] == "tensor-center-trivial":
        lhs = Fraction(ctx.ztensor.order)
        rhs = Fraction(1)
        return TheoremCheck(
            id="ex-3.1",
            group=ctx.spec,
            variant=inst["variant"],
            lhs=lhs,
            rhs=rhs,
            relation="eq",
            holds=lhs == rhs,
        )
    n = inst["n"]
    lhs = ctx.dn_full(n)
    rhs = Fraction(2**n - 1, 2**n)
    return TheoremCheck(
        id="ex-3.1",
        group=ctx.spec,
        n=n,
        variant=inst["variant"],
        lhs=lhs,
        rhs=rhs,
        relation="le",
        holds=lhs <= rhs,
    )


def _gen_ex_3_2(ctx: EntryContext) -> list[dict]:
    if ctx.spec != "C4":
        return []
    h = subgroup_generated(ctx.group, [ctx.group.power(1, 2)])
    return [{"subgroup": h.elements, "n": 2}]


def _eval_ex_3_2(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    lhs = ctx.dn(h, inst["n"])
    rhs = Fraction(1)
    return TheoremCheck(
        id="ex-3.2",
        group=ctx.spec,
        subgroup=h.elements,
        n=inst["n"],
        lhs=lhs,
        rhs=rhs,
        relation="eq",
        holds=lhs == rhs,
    )


EX_3_3_REFERENCE = Fraction(192, 2048)


def _gen_ex_3_3(ctx: EntryContext) -> list[dict]:
    if ctx.spec != "D8":
        return []
    h = subgroup_from_words(ctx.group, "a^2,a*b")
    return [{"subgroup": h.elements, "n": 4}]


def _eval_ex_3_3(ctx: EntryContext, inst: dict) -> TheoremCheck:
    h = ctx.handle(inst["subgroup"])
    lhs = ctx.dn(h, inst["n"])
    rhs = EX_3_3_REFERENCE
    holds = lhs == rhs
    note = None
    witness = None
    if not holds:
        note = DISCREPANCY_NOTE
        witness = {
            "computed": _frac(lhs),
            "reference": "192/2048",
            "explanation": (
                "the subgroup <a^2, a*b> is abelian, so every length-4 "
                "iterated commutator is the identity and the identity pairs "
                "trivially with every element; the definition forces the "
                "value 1"
            ),
        }
    return TheoremCheck(
        id="ex-3.3",
        group=ctx.spec,
        subgroup=h.elements,
        n=inst["n"],
        lhs=lhs,
        rhs=rhs,
        relation="eq",
        holds=holds,
        note=note,
        witness=witness,
    )


_GENERATORS: dict[str, Callable[[EntryContext], list[dict]]] = {
    "thm-1.1": _gen_thm_1_1,
    "thm-1.2": _gen_thm_1_2,
    "thm-1.3": _gen_thm_1_3,
    "lem-2.1": _gen_lem_2_1,
    "thm-2.2": _gen_per_subgroup_n,
    "thm-2.3": _gen_per_subgroup_n,
    "thm-2.5": _gen_per_n,
    "thm-2.6": _gen_thm_2_6,
    "lem-2.7": _gen_lem_2_7,
    "thm-2.8": _gen_thm_2_8,
    "thm-3cases": _gen_thm_3cases,
    "thm-quot": _gen_thm_quot,
    "sanity-erl": _gen_sanity_erl,
    "sanity-lescot": _gen_sanity_lescot,
    "ex-3.1": _gen_ex_3_1,
    "ex-3.2": _gen_ex_3_2,
    "ex-3.3": _gen_ex_3_3,
}

_EVALUATORS: dict[str, Callable[[EntryContext, dict], TheoremCheck]] = {
    "thm-1.1": _eval_thm_1_1,
    "thm-1.2": _eval_thm_1_2,
    "thm-1.3": _eval_thm_1_3,
    "lem-2.1": _eval_lem_2_1,
    "thm-2.2": _eval_thm_2_2,
    "thm-2.3": _eval_thm_2_3,
    "thm-2.5": _eval_thm_2_5,
    "thm-2.6": _eval_thm_2_6,
    "lem-2.7": _eval_lem_2_7,
    "thm-2.8": _eval_thm_2_8,
    "thm-3cases": _eval_thm_3cases,
    "thm-quot": _eval_thm_quot,
    "sanity-erl": _eval_sanity_erl,
    "sanity-lescot": _eval_sanity_lescot,
    "ex-3.1": _eval_ex_3_1,
    "ex-3.2": _eval_ex_3_2,
    "ex-3.3": _eval_ex_3_3,
}


def _skipped(
    check_id: str,
    spec: str,
    subgroup: Optional[tuple[int, ...]] = None,
    normal: Optional[tuple[int, ...]] = None,
    n: Optional[int] = None,
    reason: str = "",
) -> TheoremCheck:
    return TheoremCheck(
        id=check_id,
        group=spec,
        subgroup=subgroup,
        normal=normal,
        n=n,
        holds=None,
        skipped=True,
        note=reason or None,
    )


def check_theorem(
    check_id: str, instance: dict, config: Optional[Config] = None
) -> TheoremCheck:
    """Evaluate a single check instance from scratch.

    ``instance`` carries at least ``group`` (a spec string) plus whatever the
    check consumes: ``subgroup`` and ``normal`` as element-index sequences,
    ``n``, ``variant``.  An instance whose hypotheses fail yields a skipped
    record, not a failure.
    """
    if check_id not in _EVALUATORS:
        raise SpecError(f"unknown check id {check_id!r}")
    config = config or Config()
    spec = instance["group"]
    group = group_from_spec(spec)
    ctx = EntryContext(spec, group, config)
    inst = {
        key: (tuple(value) if key in ("subgroup", "normal") else value)
        for key, value in instance.items()
        if key != "group"
    }
    matched = _match_instance(inst, _GENERATORS[check_id](ctx))
    if matched is None:
        return _skipped(
            check_id,
            spec,
            subgroup=inst.get("subgroup"),
            normal=inst.get("normal"),
            n=inst.get("n"),
            reason="hypothesis-not-met",
        )
    try:
        return _EVALUATORS[check_id](ctx, matched)
    except LimitError as exc:
        return _skipped(
            check_id,
            spec,
            subgroup=inst.get("subgroup"),
            normal=inst.get("normal"),
            n=inst.get("n"),
            reason=f"exceeded-limit: {exc}",
        )


def _match_instance(inst: dict, applicable: list[dict]) -> Optional[dict]:
    """Find the generated instance the caller is asking about, if any.

    A computed variant (one the evaluator stamps on the record rather than
    reading from the instance) may be present in ``inst``; it is ignored when
    the generated instance does not carry one.
    """
    keys = ("subgroup", "normal", "n", "variant")
    probe = {k: inst.get(k) for k in keys if inst.get(k) is not None}
    for cand in applicable:
        cnorm = {k: v for k, v in cand.items() if v is not None}
        if any(probe.get(k) != v for k, v in cnorm.items()):
            continue
        if set(probe) - set(cnorm) - {"variant"}:
            continue
        return cand
    return None


def evaluate_entry(spec: str, check_ids: Sequence[str], config: Config) -> list[TheoremCheck]:
    """All checks for one corpus entry; the unit of parallel work."""
    group = group_from_spec(spec)
    ctx = EntryContext(spec, group, config)
    tensor_failed: Optional[str] = None
    try:
        ctx.tensor
    except LimitError as exc:
        tensor_failed = str(exc)
    checks: list[TheoremCheck] = []
    for check_id in check_ids:
        if tensor_failed is not None and check_id not in TENSOR_FREE_IDS:
            checks.append(
                _skipped(check_id, spec, reason=f"exceeded-limit: {tensor_failed}")
            )
            continue
        for inst in _GENERATORS[check_id](ctx):
            try:
                checks.append(_EVALUATORS[check_id](ctx, inst))
            except LimitError as exc:
                checks.append(
                    _skipped(
                        check_id,
                        spec,
                        subgroup=inst.get("subgroup"),
                        normal=inst.get("normal"),
                        n=inst.get("n"),
                        reason=f"exceeded-limit: {exc}",
                    )
                )
    return checks


@dataclass
class VerificationReport:
    version: str
    config: dict
    checks: list[TheoremCheck]
    summary: dict

    def to_json(self) -> str:
        doc = {
            "version": self.version,
            "config": self.config,
            "checks": [check.to_dict() for check in self.checks],
            "summary": self.summary,
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        import csv as _csv

        columns = [
            "id", "group", "subgroup", "normal", "n", "variant",
            "lhs", "lhs_decimal", "rhs", "rhs_decimal", "relation",
            "holds", "skipped", "note", "witness",
        ]
        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for check in self.checks:
            row = check.to_dict()
            writer.writerow(
                [
                    _csv_cell(row.get(col)) for col in columns
                ]
            )
        return buf.getvalue()

    def to_table(self) -> str:
        header = f"{'id':12} {'group':10} {'sub':4} {'nrm':4} {'n':>2} {'variant':18} {'lhs':>12} {'rhs':>12} verdict"
        lines = [header, "-" * len(header)]
        for check in self.checks:
            sub = str(len(check.subgroup)) if check.subgroup else ""
            nrm = str(len(check.normal)) if check.normal else ""
            if check.skipped:
                verdict = "SKIP"
            elif check.note:
                verdict = "FLAG"
            elif check.holds:
                verdict = "ok"
            else:
                verdict = "VIOLATED"
            lhs = format_fraction(check.lhs) if check.lhs is not None else ""
            rhs = format_fraction(check.rhs) if check.rhs is not None else ""
            lines.append(
                f"{check.id:12} {check.group:10} {sub:4} {nrm:4} "
                f"{check.n if check.n is not None else '':>2} "
                f"{check.variant or '':18} {lhs:>12} {rhs:>12} {verdict}"
            )
        lines.append("")
        lines.append(
            "pass {pass} fail {fail} skipped {skipped} flagged {flagged}".format(
                **self.summary
            )
        )
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "table":
            return self.to_table()
        raise SpecError(f"unknown output format {fmt!r}")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def summarize(checks: Sequence[TheoremCheck]) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0, "flagged": 0}
    for check in checks:
        if check.skipped:
            counts["skipped"] += 1
        elif check.note is not None:
            counts["flagged"] += 1
        elif check.holds:
            counts["pass"] += 1
        else:
            counts["fail"] += 1
    return counts


def normalize_check_ids(ids: Sequence[str] | str) -> tuple[str, ...]:
    if isinstance(ids, str):
        ids = [part.strip() for part in ids.split(",") if part.strip()]
    if list(ids) == ["all"]:
        return ALL_CHECK_IDS
    out = []
    for check_id in ids:
        if check_id == "all":
            raise SpecError("'all' cannot be combined with explicit check ids")
        if check_id not in ALL_CHECK_IDS:
            raise SpecError(f"unknown check id {check_id!r}")
        out.append(check_id)
    if not out:
        raise SpecError("no check ids given")
    return tuple(dict.fromkeys(out))


def run_suite(
    corpus: Sequence[CorpusEntry],
    check_ids: Sequence[str] | str = "all",
    config: Optional[Config] = None,
) -> VerificationReport:
    """Evaluate the requested checks on every corpus entry.

    Entries are independent; with ``config.jobs > 1`` they are evaluated in a
    process pool.  The report is a deterministic ordered merge, so worker
    count never changes the output bytes.
    """
    config = config or Config()
    ids = normalize_check_ids(check_ids)
    specs = [entry.spec for entry in corpus]
    if config.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            batches = list(pool.map(_worker, [(spec, ids, config) for spec in specs]))
    else:
        batches = [evaluate_entry(spec, ids, config) for spec in specs]
    checks = [check for batch in batches for check in batch]
    checks.sort(key=TheoremCheck.sort_key)
    return VerificationReport(
        version=__version__,
        config=config.echo(),
        checks=checks,
        summary=summarize(checks),
    )


def _worker(args: tuple) -> list[TheoremCheck]:
    spec, ids, config = args
    return evaluate_entry(spec, ids, config)
