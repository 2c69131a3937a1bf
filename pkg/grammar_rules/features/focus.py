"""
Focus words: the tokens an instance's features are read from.

Roles:
  dep            the instance's first member (the dependent, or the token for case)
  head           the second member of a pair task
  head-head      the syntactic head of `head` (pair tasks)
  dep-head       the syntactic head of `dep` (single-token tasks)
  dep-child-i    up to MAX_CHILDREN dependents of `dep`, closest first
  head-child-i   up to MAX_CHILDREN dependents of `head`, closest first
"""

from dataclasses import dataclass

from ..taskgen import TaskInstance
from ..treebank import Sentence, Token

MAX_CHILDREN = 3


@dataclass(frozen=True)
class FocusSet:
    sentence: Sentence
    roles: tuple[tuple[str, int], ...]

    def __contains__(self, role: str) -> bool:
        return any(r == role for r, _ in self.roles)

    def __getitem__(self, role: str) -> int:
        for r, token_id in self.roles:
            if r == role:
                return token_id
        raise KeyError(role)

    def as_dict(self) -> dict[str, int]:
        return dict(self.roles)

    def tokens(self) -> list[tuple[str, Token]]:
        return [(role, self.sentence.token(token_id)) for role, token_id in self.roles]


def collect_focus(
    sentence: Sentence,
    instance: TaskInstance,
    max_children: int = MAX_CHILDREN,
) -> FocusSet:
    """Collect the relation tokens, their heads and their closest dependents."""
    members = set(instance.focus_ids)
    roles: list[tuple[str, int]] = [("dep", instance.focus_a)]

    dep = sentence.token(instance.focus_a)
    if instance.focus_b is not None:
        roles.append(("head", instance.focus_b))
        head = sentence.token(instance.focus_b)
        if not head.is_root and head.head not in members:
            roles.append(("head-head", head.head))
    else:
        head = None
        if not dep.is_root:
            roles.append(("dep-head", dep.head))

    roles.extend(_child_roles("dep", dep, sentence, members, max_children))
    if head is not None:
        roles.extend(_child_roles("head", head, sentence, members, max_children))

    return FocusSet(sentence=sentence, roles=tuple(roles))


def _child_roles(
    prefix: str,
    token: Token,
    sentence: Sentence,
    members: set[int],
    max_children: int,
) -> list[tuple[str, int]]:
    children = [child for child in sentence.children(token.id) if child.id not in members]
    children.sort(key=lambda child: (abs(child.id - token.id), child.id))
    return [
        (f"{prefix}-child-{i}", child.id)
        for i, child in enumerate(children[:max_children], start=1)
    ]
