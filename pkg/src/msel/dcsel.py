"""Incremental maintenance of a selected group under changing constraints.

A Session wraps one graph plus the current constraint pair and solution. When
a constraint changes, the session reuses what earlier peels already computed:
size decreases are answered from the recorded per-size profile, size increases
peel only the nodes outside the current group, and similarity changes shrink
or regrow the group around its surviving core. Every peel performed along the
way folds its per-size records back into the session profile (shifted to the
combined group size), so later decreases see them too.
"""

from __future__ import annotations

import heapq
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    MselError,
    ParameterError,
    ParseError,
    PreconditionError,
    ScheduleError,
)
from .graph import (
    ConstraintPair,
    SimGraph,
    Solution,
    cross_weight,
    disjoint_union,
    incident_weight,
    is_feasible,
)
from .peel import PeelProfile, PeelStats, PeelTrace, modified_sgsel

EVENT_KINDS = ("size_set", "size_delta", "similarity_set", "similarity_delta", "augment")


@dataclass(frozen=True)
class ScheduleEvent:
    """One constraint change: a size/similarity set or delta, or a graph merge."""

    kind: str
    value: int | float | str
    bridges: str | None = None

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise ParameterError(f"unknown event kind {self.kind!r}")
        if self.kind.startswith("size") and not isinstance(self.value, int):
            raise ParameterError(f"{self.kind} needs an integer value, got {self.value!r}")
        if self.kind.startswith("similarity") and not isinstance(self.value, float):
            raise ParameterError(f"{self.kind} needs a real value, got {self.value!r}")
        if self.kind == "augment" and not isinstance(self.value, str):
            raise ParameterError(f"augment needs a file path, got {self.value!r}")
        if self.bridges is not None and self.kind != "augment":
            raise ParameterError("bridges only accompany augment events")

    def text(self) -> str:
        """Canonical one-token-spacing form, used as the history label."""
        if self.kind == "size_set":
            return f"p={self.value}"
        if self.kind == "size_delta":
            v = self.value
            return f"p+={v}" if v >= 0 else f"p-={-v}"
        if self.kind == "similarity_set":
            return f"s={self.value:g}"
        if self.kind == "similarity_delta":
            v = self.value
            return f"s+={v:g}" if v >= 0 else f"s-={-v:g}"
        return f"augment {Path(self.value).name}"


@dataclass(frozen=True)
class StepRecord:
    step: int
    event: str
    alpha: float
    size: int
    feasible: bool
    wall_ns: int


@dataclass
class Session:
    """Mutable solver state: graph, constraints, solution, profile, history.

    ``event_removals`` counts peel removals caused by constraint events, so
    tests can compare incremental work against from-scratch re-solving; the
    initial solve's removals live only in ``stats``.
    """

    graph: SimGraph
    constraints: ConstraintPair
    current: Solution
    profile: PeelProfile
    history: list[StepRecord] = field(default_factory=list)
    stats: PeelStats = field(default_factory=PeelStats)
    event_removals: int = 0


def _record(sess: Session, event: str, t0: int) -> StepRecord:
    sol = sess.current
    rec = StepRecord(
        step=len(sess.history),
        event=event,
        alpha=sol.alpha,
        size=sol.size,
        feasible=is_feasible(sol.members, sess.graph, sess.constraints),
        wall_ns=time.perf_counter_ns() - t0,
    )
    sess.history.append(rec)
    return rec


def init_session(g: SimGraph, c: ConstraintPair) -> Session:
    """Solve from scratch and open a session around the result.

    An infeasible start (nothing satisfies the constraints) is not an error:
    the session opens with an empty solution and feasible=false in history.
    """
    if g.n == 0:
        raise PreconditionError("cannot open a session on an empty graph")
    t0 = time.perf_counter_ns()
    stats = PeelStats()
    sol, profile = modified_sgsel(g, c, stats=stats)
    sess = Session(graph=g, constraints=c, current=sol, profile=profile, stats=stats)
    _record(sess, "init", t0)
    return sess


def _remember_current(sess: Session) -> None:
    """Store the adopted solution in the profile so later decreases can see it."""
    sol = sess.current
    if sol:
        trace = PeelTrace((), tuple(sorted(sol.members)))
        sess.profile.record(sol.size, sol.alpha, trace, 0)


def _fold_residual(sess: Session, base: frozenset[int], w_base: float, resid: PeelProfile) -> None:
    """Merge a seeded peel's per-size records into the session profile.

    Records from a peel of V minus ``base`` describe residual sets; the folded
    entry at size |base|+k describes base union the residual set of size k,
    with the objective recomputed to include the base weight and the weight
    crossing between base and residual nodes.
    """
    if len(resid) == 0:
        return
    if not base:
        for size, alpha, trace, k in resid.items():
            sess.profile.record(size, alpha, trace, k)
        return
    g = sess.graph
    entries = list(resid.items())
    order = entries[0][2].order
    base_tuple = tuple(sorted(base))
    folded = PeelTrace(order, base_tuple)
    cross = 0.0
    nb = len(base)
    n_resid = len(order)
    alphas = {size: alpha for size, alpha, _, _ in entries}
    for j in range(n_resid - 1, -1, -1):
        cross += incident_weight(order[j], base, g)
        k = n_resid - j
        alpha_k = alphas.get(k)
        if alpha_k is None:
            continue
        combined_w = w_base + alpha_k * k + cross
        sess.profile.record(nb + k, combined_w / (nb + k), folded, k)


def _expand(
    g: SimGraph,
    members: frozenset[int],
    weight: float,
    exclude: frozenset[int] = frozenset(),
) -> tuple[frozenset[int], float]:
    """Absorb outside nodes while the best candidate's incident weight beats α.

    Each accepted node strictly raises the average, so the loop terminates.
    Candidates are nodes adjacent to the group; ties break to the lowest id.
    """
    if not members:
        return members, weight
    inc: dict[int, float] = {}
    for x in members:
        for t, w in g.neighbors(x):
            if t not in members and t not in exclude:
                inc[t] = inc.get(t, 0.0) + w
    heap = [(-iw, u) for u, iw in inc.items()]
    heapq.heapify(heap)
    got = set(members)
    size = len(got)
    while heap:
        niw, u = heapq.heappop(heap)
        iw = -niw
        if u in got or iw != inc.get(u, 0.0):
            continue
        if iw * size <= weight:
            break
        got.add(u)
        weight += iw
        size += 1
        del inc[u]
        for t, w in g.neighbors(u):
            if t not in got and t not in exclude:
                niw2 = inc.get(t, 0.0) + w
                inc[t] = niw2
                heapq.heappush(heap, (-niw2, t))
    return frozenset(got), weight


def expand_greedy(sess: Session, label: str = "expand") -> Solution:
    """Grow the current group by the absorb rule and record the outcome."""
    if not sess.current:
        raise PreconditionError("expansion needs a nonempty current solution")
    t0 = time.perf_counter_ns()
    members, _ = _expand(sess.graph, sess.current.members, sess.current.total_weight)
    sess.current = Solution.from_members(sess.graph, members)
    _remember_current(sess)
    _record(sess, label, t0)
    return sess.current


def apply_size_delta(sess: Session, dp: int, label: str | None = None) -> Solution:
    """Move the size floor by ``dp`` and repair the solution.

    Decreases consult the profile: a feasible group strictly better than the
    incumbent is adopted (or the best feasible one, if the incumbent is not
    itself feasible). Increases that the current group already satisfies are
    free; otherwise the nodes outside the group are peeled with size budget
    ``dp``, the best residual group is merged in, and the absorb rule runs
    on the union.
    """
    t0 = time.perf_counter_ns()
    c = sess.constraints
    p_new = c.p + dp
    if p_new < 0:
        raise ParameterError(f"size constraint would become {p_new}")
    if label is None:
        label = f"p+={dp}" if dp >= 0 else f"p-={-dp}"
    g = sess.graph

    if dp == 0:
        _record(sess, label, t0)
        return sess.current

    c_new = ConstraintPair(s=c.s, p=p_new)
    sess.constraints = c_new

    if dp < 0:
        ranked = sorted(sess.profile.items(), key=lambda e: (-e[1], e[0]))
        # An infeasible incumbent never sets the bar: any feasible group beats it.
        cur_ok = bool(sess.current) and is_feasible(sess.current.members, g, c_new)
        floor = sess.current.alpha if cur_ok else -1.0
        for size, alpha, trace, k in ranked:
            if size <= p_new:
                continue
            if alpha <= floor:
                break
            cand = Solution.from_members(g, trace.members_at(k))
            if cand.alpha > floor and is_feasible(cand.members, g, c_new):
                sess.current = cand
                break
        _record(sess, label, t0)
        return sess.current

    if sess.current and p_new < sess.current.size:
        _record(sess, label, t0)
        return sess.current

    base = sess.current.members
    within = [u for u in range(g.n) if u not in base]
    stats = PeelStats()
    resid_sol, resid_prof = modified_sgsel(g, ConstraintPair(s=c.s, p=dp), within=within, stats=stats)
    sess.stats.pushes += stats.pushes
    sess.stats.pops += stats.pops
    sess.stats.removals += stats.removals
    sess.event_removals += stats.removals
    _fold_residual(sess, base, sess.current.total_weight, resid_prof)

    union = base | resid_sol.members
    w = sess.current.total_weight + resid_sol.total_weight
    if base and resid_sol.members:
        w += cross_weight(resid_sol.members, base, g)
    members, _ = _expand(g, union, w)
    repaired = Solution.from_members(g, members)

    # The residual peel cannot see groups that mix old members with outside
    # nodes; when the union falls short of the new floor, one fresh global
    # solve decides whether anything feasible exists at all.
    if not is_feasible(repaired.members, g, c_new):
        fresh_stats = PeelStats()
        fresh_sol, fresh_prof = modified_sgsel(g, c_new, stats=fresh_stats)
        sess.stats.pushes += fresh_stats.pushes
        sess.stats.pops += fresh_stats.pops
        sess.stats.removals += fresh_stats.removals
        sess.event_removals += fresh_stats.removals
        _fold_residual(sess, frozenset(), 0.0, fresh_prof)
        if is_feasible(fresh_sol.members, g, c_new):
            repaired = fresh_sol
    sess.current = repaired
    _remember_current(sess)
    _record(sess, label, t0)
    return sess.current


def _improve_pass(sess: Session, exclude: frozenset[int] = frozenset()) -> None:
    """Peel outside the current group, then adopt the best of: the union of
    current and the residual group (absorbed), the residual group alone
    (absorbed), or the unchanged current. Feasibility outranks the objective,
    and the incumbent wins exact ties."""
    g = sess.graph
    c = sess.constraints
    cur = sess.current
    base = cur.members
    within = [u for u in range(g.n) if u not in base and u not in exclude]
    stats = PeelStats()
    resid_sol, resid_prof = modified_sgsel(g, c, within=within, stats=stats)
    sess.stats.pushes += stats.pushes
    sess.stats.pops += stats.pops
    sess.stats.removals += stats.removals
    sess.event_removals += stats.removals
    _fold_residual(sess, base, cur.total_weight, resid_prof)

    candidates: list[Solution] = []
    if base or resid_sol.members:
        union = base | resid_sol.members
        w = cur.total_weight + resid_sol.total_weight
        if base and resid_sol.members:
            w += cross_weight(resid_sol.members, base, g)
        m1, _ = _expand(g, union, w, exclude=exclude)
        candidates.append(Solution.from_members(g, m1))
    if base and resid_sol.members:
        m2, _ = _expand(g, resid_sol.members, resid_sol.total_weight, exclude=exclude)
        candidates.append(Solution.from_members(g, m2))

    best = cur
    best_key = (is_feasible(cur.members, g, c), cur.alpha)
    for cand in candidates:
        key = (is_feasible(cand.members, g, c), cand.alpha)
        if key > best_key:
            best, best_key = cand, key

    # Nothing feasible among groups anchored on the incumbent: a mixed group
    # may still exist, which only a peel of the whole graph can find.
    if not best_key[0] and base:
        fresh_stats = PeelStats()
        fresh_sol, fresh_prof = modified_sgsel(g, c, stats=fresh_stats)
        sess.stats.pushes += fresh_stats.pushes
        sess.stats.pops += fresh_stats.pops
        sess.stats.removals += fresh_stats.removals
        sess.event_removals += fresh_stats.removals
        _fold_residual(sess, frozenset(), 0.0, fresh_prof)
        key = (is_feasible(fresh_sol.members, g, c), fresh_sol.alpha)
        if key > best_key:
            best = fresh_sol
    sess.current = best
    _remember_current(sess)


def apply_similarity_delta(sess: Session, ds: float, label: str | None = None) -> Solution:
    """Move the similarity floor by ``ds`` and repair the solution.

    Raising the floor strips nodes that no longer have any qualifying edge;
    if the stripped group is still valid it is kept, otherwise the gap is
    refilled by a seeded peel of the remaining search space. Lowering the
    floor enlarges the search space, which is handled as an improvement pass
    over everything outside the current group.
    """
    t0 = time.perf_counter_ns()
    c = sess.constraints
    s_new = c.s + ds
    if not (0.0 < s_new < 1.0):
        raise ParameterError(f"similarity constraint would become {s_new}")
    if label is None:
        label = f"s+={ds:g}" if ds >= 0 else f"s-={-ds:g}"
    g = sess.graph

    if ds == 0:
        _record(sess, label, t0)
        return sess.current

    c_new = ConstraintPair(s=s_new, p=c.p)
    sess.constraints = c_new

    if ds < 0:
        _improve_pass(sess)
        _record(sess, label, t0)
        return sess.current

    dead = frozenset(u for u in range(g.n) if g.max_incident_weight(u) <= s_new)
    kept = sess.current.members - dead
    if len(kept) > c_new.p:
        cand = Solution.from_members(g, kept)
        if is_feasible(cand.members, g, c_new):
            sess.current = cand
            _remember_current(sess)
            _record(sess, label, t0)
            return sess.current

    budget = max(c_new.p - len(kept), 0)
    within = [u for u in range(g.n) if u not in dead and u not in kept]
    stats = PeelStats()
    resid_sol, resid_prof = modified_sgsel(g, ConstraintPair(s=s_new, p=budget), within=within, stats=stats)
    sess.stats.pushes += stats.pushes
    sess.stats.pops += stats.pops
    sess.stats.removals += stats.removals
    sess.event_removals += stats.removals
    base_sol = Solution.from_members(g, kept)
    _fold_residual(sess, kept, base_sol.total_weight, resid_prof)

    union = kept | resid_sol.members
    w = base_sol.total_weight + resid_sol.total_weight
    if kept and resid_sol.members:
        w += cross_weight(resid_sol.members, kept, g)
    members, _ = _expand(g, union, w, exclude=dead)
    repaired = Solution.from_members(g, members)

    if not is_feasible(repaired.members, g, c_new):
        fresh_stats = PeelStats()
        fresh_sol, fresh_prof = modified_sgsel(g, c_new, stats=fresh_stats)
        sess.stats.pushes += fresh_stats.pushes
        sess.stats.pops += fresh_stats.pops
        sess.stats.removals += fresh_stats.removals
        sess.event_removals += fresh_stats.removals
        _fold_residual(sess, frozenset(), 0.0, fresh_prof)
        if is_feasible(fresh_sol.members, g, c_new):
            repaired = fresh_sol
    sess.current = repaired
    _remember_current(sess)
    _record(sess, label, t0)
    return sess.current


def augment_graph(
    sess: Session,
    extra: SimGraph,
    bridges: list[tuple[int, int, float]] | None = None,
    label: str = "augment",
) -> Solution:
    """Merge a second graph (ids remapped past the current ones) plus optional
    bridge edges, then search the enlarged space for a better group.

    The adopted result is the best feasible candidate among: current absorbed
    into the merged residual group, the residual group alone, or current
    unchanged. With an empty extra graph and no bridges nothing changes.
    """
    t0 = time.perf_counter_ns()
    bridge_list = list(bridges) if bridges else []
    sess.graph = disjoint_union(sess.graph, extra, bridge_list)
    if extra.n == 0 and not bridge_list:
        _record(sess, label, t0)
        return sess.current
    _improve_pass(sess)
    _record(sess, label, t0)
    return sess.current


def run_schedule(sess: Session, events: list[ScheduleEvent]) -> list[StepRecord]:
    """Apply events in order, aborting on the first invalid one.

    Returns the history records the events appended, one per event; the error
    for an invalid event carries its 1-based position in the list.
    """
    from .dataio import parse_bridges, read_msg1

    records: list[StepRecord] = []
    for i, ev in enumerate(events, start=1):
        try:
            if ev.kind == "size_delta":
                apply_size_delta(sess, ev.value, label=ev.text())
            elif ev.kind == "size_set":
                apply_size_delta(sess, ev.value - sess.constraints.p, label=ev.text())
            elif ev.kind == "similarity_delta":
                apply_similarity_delta(sess, ev.value, label=ev.text())
            elif ev.kind == "similarity_set":
                apply_similarity_delta(sess, ev.value - sess.constraints.s, label=ev.text())
            else:
                extra = read_msg1(ev.value)
                bridge_list = parse_bridges(ev.bridges) if ev.bridges else []
                augment_graph(sess, extra, bridge_list, label=ev.text())
        except MselError as e:
            raise ScheduleError(str(e), step=i) from e
        records.append(sess.history[-1])
    return records


_INIT_RE = re.compile(r"^init\s+p\s*=\s*(\d+)\s+s\s*=\s*([0-9.eE+-]+)$")
_DELTA_RE = re.compile(r"^([ps])\s*(\+=|-=|=)\s*(\S+)$")
_AUGMENT_RE = re.compile(r"^augment\s+(\S+)(?:\s+bridges\s+(\S+))?$")


def parse_schedule(path: str | Path) -> tuple[ConstraintPair, list[ScheduleEvent]]:
    """Read a schedule file: an init line, then one constraint event per line.

    Grammar: `init p=<int> s=<real>` first, then `p += <int>`, `p -= <int>`,
    `p = <int>`, the same three forms for `s` with reals, or
    `augment <path> [bridges <path>]`. Blank lines and `#` comments are
    skipped. Relative event paths resolve against the schedule's directory.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read schedule: {e}", path=str(path)) from e

    init: ConstraintPair | None = None
    events: list[ScheduleEvent] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if init is None:
            m = _INIT_RE.match(line)
            if not m:
                raise ParseError(
                    f"first directive must be 'init p=<int> s=<real>', got {line!r}",
                    path=str(path), line=lineno,
                )
            try:
                init = ConstraintPair(s=float(m.group(2)), p=int(m.group(1)))
            except (MselError, ValueError) as e:
                raise ParseError(str(e), path=str(path), line=lineno) from e
            continue
        m = _AUGMENT_RE.match(line)
        if m:
            gpath = str((path.parent / m.group(1)).resolve())
            bpath = str((path.parent / m.group(2)).resolve()) if m.group(2) else None
            events.append(ScheduleEvent("augment", gpath, bridges=bpath))
            continue
        m = _DELTA_RE.match(line)
        if m:
            var, op, val = m.groups()
            try:
                if var == "p":
                    num: int | float = int(val)
                    kind = "size_set" if op == "=" else "size_delta"
                else:
                    num = float(val)
                    kind = "similarity_set" if op == "=" else "similarity_delta"
            except ValueError as e:
                raise ParseError(f"bad number {val!r}", path=str(path), line=lineno) from e
            if op == "-=":
                num = -num
            events.append(ScheduleEvent(kind, num))
            continue
        raise ParseError(f"unrecognized directive {line!r}", path=str(path), line=lineno)

    if init is None:
        raise ParseError("schedule has no init line", path=str(path))
    return init, events
