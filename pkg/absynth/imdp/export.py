from typing import Optional

import numpy as np
from abstraction import LabelSets
from scenario import IntervalTable
from scipy import sparse
from utils import get_logger
from utils.errors import ConfigError

from .assemble import assemble_imdp
from .types import IMDP, Policy

logger = get_logger(__name__)

LABELS = ("goal", "unsafe", "none")


def export_policy_lines(policy: Policy) -> list[str]:
    return [f"policy {s} {k} {a}" for s, k, a in policy.defined()]


def export_interval_model(model: IMDP, policy: Optional[Policy] = None) -> str:
    """
    Write an iMDP (and optionally a policy) in the plain-text interval format.

    Lines, in order:

        imdp <locations> <actions> <horizon>
        state <id> <goal|unsafe|none>
        edge <s> <a> <s'> <p_low> <p_high>
        policy <s> <k> <a>

    Edges are listed for every enabled (s, a) and every successor with a
    positive upper bound, sorted by (s, a, s'); probabilities use the
    shortest representation that reads back to the same float.

    Args:
        model (IMDP): The model
        policy (Optional[Policy]): Policy to append

    Returns:
        str: The document, newline-terminated
    """
    table = model.intervals
    lines = [f"imdp {model.location_count} {model.action_count} {model.horizon}"]
    lines += [f"state {s} {model.labels.label_of(s)}" for s in range(model.location_count)]

    for s in range(model.location_count):
        for a in model.actions_at(s):
            span = table.row_slice(a)
            for successor, lo, hi in zip(
                table.successors[span], table.lower[span], table.upper[span]
            ):
                if hi > 0.0:
                    lines.append(f"edge {s} {a} {successor} {float(lo)!r} {float(hi)!r}")

    if policy is not None:
        lines += export_policy_lines(policy)
    return "\n".join(lines) + "\n"


def _fields(line: str, keyword: str, count: int, number: int) -> list[str]:
    parts = line.split()
    if len(parts) != count or parts[0] != keyword:
        raise ConfigError(f"line {number}", f"expected {count - 1} fields after '{keyword}'")
    return parts[1:]


def parse_policy(text: str, location_count: int, horizon: int) -> Policy:
    """
    Read the `policy <s> <k> <a>` lines of a document; other lines are ignored.

    Args:
        text (str): Document text
        location_count (int): Number of locations
        horizon (int): Number of time steps

    Returns:
        Policy: The policy, undefined wherever no line sets it
    """
    actions = np.full((horizon, location_count), -1, dtype=np.int64)
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.startswith("policy "):
            continue
        s, k, a = (int(v) for v in _fields(line, "policy", 4, number))
        if not (0 <= s < location_count and 0 <= k < horizon):
            raise ConfigError(f"line {number}", f"policy entry ({s}, {k}) out of range")
        actions[k, s] = a
    return Policy(actions)


def parse_interval_model(text: str) -> tuple[IMDP, Optional[Policy]]:
    """
    Read a document written by export_interval_model.

    Every location enabling an action must list the same interval row for it.

    Args:
        text (str): Document text

    Returns:
        tuple[IMDP, Optional[Policy]]: The model, and the policy if the document has one
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ConfigError("line 1", "empty document")
    location_count, action_count, horizon = (
        int(v) for v in _fields(lines[0], "imdp", 4, 1)
    )

    goal, unsafe = set(), set()
    enabled = sparse.lil_matrix((location_count, action_count), dtype=bool)
    rows: list[dict[int, tuple[float, float]]] = [{} for _ in range(action_count)]
    row_owner: dict[int, int] = {}
    listed: dict[tuple[int, int], tuple[int, set[int]]] = {}
    has_policy = False

    for number, line in enumerate(lines[1:], start=2):
        keyword = line.split()[0]
        if keyword == "state":
            s, label = _fields(line, "state", 3, number)
            if label not in LABELS:
                raise ConfigError(f"line {number}", f"unknown label '{label}'")
            if label == "goal":
                goal.add(int(s))
            elif label == "unsafe":
                unsafe.add(int(s))
        elif keyword == "edge":
            s, a, successor, lo, hi = _fields(line, "edge", 6, number)
            s, a, successor = int(s), int(a), int(successor)
            enabled[s, a] = True
            owner = row_owner.setdefault(a, s)
            entry = (float(lo), float(hi))
            if owner == s:
                rows[a][successor] = entry
            elif rows[a].get(successor) != entry:
                raise ConfigError(
                    f"line {number}", f"action {a} has a different row at location {s}"
                )
            else:
                listed.setdefault((s, a), (number, set()))[1].add(successor)
        elif keyword == "policy":
            has_policy = True
        else:
            raise ConfigError(f"line {number}", f"unknown keyword '{keyword}'")

    for (s, a), (number, successors) in listed.items():
        if successors != rows[a].keys():
            raise ConfigError(
                f"line {number}",
                f"location {s} lists {len(successors)} of the {len(rows[a])} edges of action {a}",
            )

    model = assemble_imdp(
        location_count,
        enabled.tocsr(),
        IntervalTable.from_rows(rows),
        LabelSets(goal=frozenset(goal), unsafe=frozenset(unsafe)),
        horizon,
    )
    policy = parse_policy(text, location_count, horizon) if has_policy else None
    logger.debug(f"Parsed iMDP with {location_count} locations")
    return model, policy
