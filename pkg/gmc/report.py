"""Line-oriented reports produced by the law and axiom checkers."""

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
INFO = "INFO"

_SEVERITY = {SKIP: 0, PASS: 1, FAIL: 2}


class Check(object):
    """The outcome of one named law.

    @ivar name: The law name, printed first on the report line.
    @ivar status: One of L{PASS}, L{FAIL} or L{SKIP}.
    @ivar counterexample: For failures, the first witnessing tuple in scan
        order, formatted as text.
    @ivar position: The order the law was declared in its suite.
    @ivar rank: A sortable key locating the counterexample in scan order.
    """

    def __init__(self, name, status, counterexample=None, position=0,
                 rank=()):
        self.name = name
        self.status = status
        self.counterexample = counterexample
        self.position = position
        self.rank = rank

    @property
    def passed(self):
        return self.status != FAIL

    def line(self):
        if self.counterexample is None:
            return "%s %s" % (self.name, self.status)
        return "%s %s %s" % (self.name, self.status, self.counterexample)

    def combine(self, other):
        """Combine two outcomes of the same law."""
        if _SEVERITY[other.status] > _SEVERITY[self.status]:
            winner = other
        elif _SEVERITY[other.status] < _SEVERITY[self.status]:
            winner = self
        elif self.status == FAIL and other.rank < self.rank:
            winner = other
        else:
            winner = self
        return Check(self.name, winner.status, winner.counterexample,
                     min(self.position, other.position), winner.rank)

    def __eq__(self, other):
        return (isinstance(other, Check) and
                (self.name, self.status, self.counterexample) ==
                (other.name, other.status, other.counterexample))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<Check %s>" % (self.line(),)


class Report(object):
    """An ordered set of law outcomes plus informational facts.

    @param title: What was checked, e.g. the PCM tag or model name.
    """

    def __init__(self, title=""):
        self.title = title
        self._checks = {}
        self._facts = {}

    def _next_position(self):
        return len(self._checks)

    def declare(self, *names):
        """Declare laws in printing order, all passing until a failure."""
        for name in names:
            if name not in self._checks:
                self._checks[name] = Check(name, PASS,
                                           position=self._next_position())

    def record(self, name, passed, counterexample=None, rank=()):
        """Record one outcome for C{name}, keeping the first failure."""
        status = PASS if passed else FAIL
        check = Check(name, status, None if passed else counterexample,
                      self._position_of(name), rank)
        self._put(check)

    def fail(self, name, counterexample, rank=()):
        self.record(name, False, counterexample, rank)

    def skip(self, name, reason=None):
        check = Check(name, SKIP, reason, self._position_of(name))
        existing = self._checks.get(name)
        if existing is None or existing.status == PASS:
            self._checks[name] = check

    def fact(self, name, value):
        """Record an informational fact, e.g. C{idempotent yes}."""
        self._facts[name] = (len(self._facts), value)

    def _position_of(self, name):
        if name in self._checks:
            return self._checks[name].position
        return self._next_position()

    def _put(self, check):
        existing = self._checks.get(check.name)
        if existing is None:
            self._checks[check.name] = check
        elif existing.status == FAIL and check.status == PASS:
            return
        elif existing.status == FAIL:
            # The first failure found in scan order is kept.
            return
        else:
            self._checks[check.name] = existing.combine(check)

    def checks(self):
        return sorted(self._checks.values(),
                      key=lambda check: (check.position, check.name))

    def check(self, name):
        return self._checks[name]

    def status(self, name):
        return self._checks[name].status

    def facts(self):
        return [(name, value) for name, (_, value) in
                sorted(self._facts.items(), key=lambda item: item[1][0])]

    def failures(self):
        return [check for check in self.checks() if check.status == FAIL]

    @property
    def passed(self):
        return not self.failures()

    def merge(self, other):
        """Return a new report holding the outcomes of both reports.

        Merging is associative and commutative: outcomes for the same law are
        combined with L{Check.combine}.
        """
        merged = Report(self.title or other.title)
        for check in self.checks() + other.checks():
            existing = merged._checks.get(check.name)
            if existing is None:
                merged._checks[check.name] = Check(
                    check.name, check.status, check.counterexample,
                    check.position, check.rank)
            else:
                merged._checks[check.name] = existing.combine(check)
        for source in (self, other):
            for name, value in source.facts():
                if name not in merged._facts:
                    merged.fact(name, value)
        return merged

    def extend(self, other, prefix=""):
        """Append the laws of C{other} after those of this report."""
        for check in other.checks():
            name = prefix + check.name
            self._checks[name] = Check(name, check.status,
                                       check.counterexample,
                                       self._next_position(), check.rank)
        for name, value in other.facts():
            self.fact(prefix + name, value)
        return self

    def lines(self):
        lines = [check.line() for check in self.checks()]
        lines.extend("%s %s %s" % (name, INFO, value)
                     for name, value in self.facts())
        return lines

    def write(self, output):
        for line in self.lines():
            output.write(line + "\n")

    def __str__(self):
        return "\n".join(self.lines())

    def __repr__(self):
        return "<Report %s %s>" % (self.title,
                                   "passed" if self.passed else "failed")
