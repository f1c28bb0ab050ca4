"""Exchange rewriting of slice lists and the equality it decides.

Two adjacent slices may swap when the wires they touch in the word between
them are disjoint and their generator grades add to something below the
ambient grade. Equality at a grade is reachability under such swaps.
"""

from collections import deque

from twisted.python import log

from gmc.exception import BudgetExceededError, TypeMismatchError
from gmc.freecat.morphism import regrade
from gmc.freecat.signature import Slice, format_word
from gmc.settings import Settings


__all__ = ["exchange_moves", "successors", "canonical_form", "equal_at",
           "equal_oracle", "admissible_at", "valid_grades", "reachable"]


def _compatible(pcm, first, second, grade):
    total = pcm.add(first, second)
    return total is not None and pcm.leq(total, grade)


def exchange_moves(signature, first, second, grade):
    """Return the swaps available to the adjacent slices C{first; second}.

    @return: A list of C{(second', first')} pairs, empty when the slices
        cannot pass each other at C{grade}.
    """
    gen1 = signature.generator(first.gen)
    gen2 = signature.generator(second.gen)
    if not _compatible(signature.pcm, gen1.grade, gen2.grade, grade):
        return []
    start1, end1 = first.position, first.position + len(gen1.cod)
    start2, end2 = second.position, second.position + len(gen2.dom)
    before = signature.slice_dom(first)
    moves = []
    if end2 <= start1:
        moves.append(_swap(signature, before, gen1, gen2, start2,
                           start1 + len(gen2.cod) - len(gen2.dom)))
    if start2 >= end1:
        moves.append(_swap(signature, before, gen1, gen2,
                           start2 - len(gen1.cod) + len(gen1.dom), start1))
    return moves


def _swap(signature, before, gen1, gen2, position2, position1):
    moved2 = Slice(before[:position2], gen2.name,
                   before[position2 + len(gen2.dom):])
    middle = signature.slice_cod(moved2)
    moved1 = Slice(middle[:position1], gen1.name,
                   middle[position1 + len(gen1.dom):])
    return moved2, moved1


def successors(signature, slices, grade):
    """Yield every slice tuple one exchange move away from C{slices}."""
    for index in range(len(slices) - 1):
        for moved2, moved1 in exchange_moves(signature, slices[index],
                                             slices[index + 1], grade):
            yield (slices[:index] + (moved2, moved1) + slices[index + 2:])


def reachable(morphism, settings=None):
    """Return the set of slice tuples exchange-reachable from C{morphism}.

    @raises BudgetExceededError: If more states than the search budget are
        visited.
    """
    settings = settings or Settings()
    signature, grade = morphism.signature, morphism.grade
    seen = set([morphism.slices])
    queue = deque([morphism.slices])
    while queue:
        current = queue.popleft()
        for following in successors(signature, current, grade):
            if following in seen:
                continue
            seen.add(following)
            if len(seen) > settings.search_budget:
                log.msg("Exchange search exceeded %d states" % (
                    settings.search_budget,))
                raise BudgetExceededError("Exchange search",
                                          settings.search_budget)
            queue.append(following)
    return seen


def _keys(slices):
    return tuple(piece.key() for piece in slices)


def _greedy_form(morphism, settings):
    """Pick the least available slice at each step of a wire-level trace.

    Every generator consumes and produces at least one wire, so a slice
    depends on an earlier one exactly when it consumes one of its wires or
    their grades cannot be exchanged.
    """
    signature, pcm, grade = (morphism.signature, morphism.signature.pcm,
                             morphism.grade)
    wires = list(range(len(morphism.dom)))
    names = dict(enumerate(morphism.dom))
    fresh = len(wires)
    events = []
    for piece in morphism.slices:
        gen = signature.generator(piece.gen)
        consumed = wires[piece.position:piece.position + len(gen.dom)]
        produced = list(range(fresh, fresh + len(gen.cod)))
        fresh += len(gen.cod)
        for wire, name in zip(produced, gen.cod):
            names[wire] = name
        wires[piece.position:piece.position + len(gen.dom)] = produced
        events.append((gen, consumed, produced))
    if len(events) > settings.search_budget:
        raise BudgetExceededError("Normalization", settings.search_budget)
    producer = {}
    for index, (gen, consumed, produced) in enumerate(events):
        for wire in produced:
            producer[wire] = index
    blockers = []
    for later, (gen, consumed, produced) in enumerate(events):
        before = set(producer[wire] for wire in consumed if wire in producer)
        for earlier in range(later):
            if not _compatible(pcm, events[earlier][0].grade, gen.grade,
                               grade):
                before.add(earlier)
        blockers.append(before)
    done = set()
    current = list(range(len(morphism.dom)))
    slices = []
    while len(done) < len(events):
        best = None
        for index, (gen, consumed, produced) in enumerate(events):
            if index in done or not blockers[index] <= done:
                continue
            key = (current.index(consumed[0]), gen.name)
            if best is None or key < best[0]:
                best = (key, index)
        (position, _), index = best
        gen, consumed, produced = events[index]
        word = tuple(names[wire] for wire in current)
        slices.append(Slice(word[:position], gen.name,
                            word[position + len(consumed):]))
        current[position:position + len(consumed)] = produced
        done.add(index)
    return tuple(slices)


def canonical_form(morphism, settings=None):
    """Return the least representative of the exchange class of C{morphism}.

    Slice tuples are ordered by their C{(position, generator name)} keys.
    """
    settings = settings or Settings()
    if not morphism.slices:
        return morphism
    if not morphism.signature.degenerate:
        return morphism.with_slices(_greedy_form(morphism, settings))
    best = min(reachable(morphism, settings), key=_keys)
    return morphism.with_slices(best)


def _prepare(first, second, grade):
    if (first.dom, first.cod) != (second.dom, second.cod):
        raise TypeMismatchError(
            "%s -> %s" % (format_word(first.dom), format_word(first.cod)),
            "%s -> %s" % (format_word(second.dom), format_word(second.cod)))
    return regrade(first, grade), regrade(second, grade)


def equal_at(first, second, grade, settings=None):
    """Decide whether two morphisms are equal once regraded to C{grade}.

    @raises NotLeqError: If either ambient grade is not below C{grade}.
    @raises TypeMismatchError: If the boundaries differ.
    """
    first, second = _prepare(first, second, grade)
    return (canonical_form(first, settings).slices ==
            canonical_form(second, settings).slices)


def equal_oracle(first, second, grade, settings=None):
    """Decide equality at C{grade} by breadth-first search over swaps.

    @raises BudgetExceededError: If a slice list is longer than the oracle
        bound or the search visits too many states.
    """
    settings = settings or Settings()
    first, second = _prepare(first, second, grade)
    for morphism in (first, second):
        if len(morphism.slices) > settings.oracle_bound:
            raise BudgetExceededError("Equality oracle", settings.oracle_bound)
    if first.slices == second.slices:
        return True
    # Swaps permute slices, so the generator multisets must agree.
    if sorted(piece.gen for piece in first.slices) != sorted(
            piece.gen for piece in second.slices):
        return False
    return second.slices in reachable(first, settings)


def admissible_at(morphism, grade):
    """Whether every slice grade of C{morphism} is below C{grade}."""
    pcm = morphism.signature.pcm
    return all(pcm.leq(piece_grade, grade)
               for piece_grade in morphism.grades())


def valid_grades(morphism):
    """Return the grades at which C{morphism} is admissible.

    @raises InfiniteCarrierError: If the PCM is infinite.
    """
    return [grade for grade in morphism.signature.pcm.elements()
            if admissible_at(morphism, grade)]
