"""Structured verification reports."""

import json


class Report:
    def __init__(self, name, **params):
        self.name = name
        self.params = params
        self.entries = []
        self.notes = []

    def add(self, check, ok, witness=None, **extra):
        entry = {"check": check, "status": "PASS" if ok else "FAIL"}
        if witness is not None and not ok:
            entry["witness"] = str(witness)
        for k, v in extra.items():
            entry[k] = v if isinstance(v, (int, str, bool, float, list, dict)) or v is None else str(v)
        self.entries.append(entry)
        return ok

    def note(self, text):
        self.notes.append(text)

    @property
    def ok(self):
        return all(e["status"] == "PASS" for e in self.entries)

    @property
    def failures(self):
        return [e for e in self.entries if e["status"] != "PASS"]

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {
            "report": self.name,
            "params": {k: (v if isinstance(v, (int, str, bool, float, list)) or v is None else str(v))
                       for k, v in self.params.items()},
            "status": "PASS" if self.ok else "FAIL",
            "entries": self.entries,
            "notes": self.notes,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self):
        head = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.name} [{head}]: {'PASS' if self.ok else 'FAIL'}"]
        for e in self.entries:
            extra = "".join(f"  {k}={v}" for k, v in e.items() if k not in ("check", "status"))
            lines.append(f"  {e['status']}  {e['check']}{extra}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()
