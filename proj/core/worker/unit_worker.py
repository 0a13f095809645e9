# SPDX-License-Identifier: Apache-2.0
"""Worker process hosting generated Python units.

Frames on stdin/stdout: 4-byte big-endian length, then a UTF-8 JSON object.
Request:  {"op": <name>, "args": {...}}
Response: {"ok": true, "payload": {...}}
       or {"ok": false, "error": {"type", "message", "line", "unit", "source_line"}}
"""

import ast
import copy
import io
import json
import math
import numbers
import os
import random
import shutil
import struct
import sys
import tempfile
import time
import traceback
from collections import OrderedDict

OUTPUT_CAP = 64 * 1024
CACHE_SIZE = 8


class _CappedStream(io.TextIOBase):
    def __init__(self, cap):
        self.cap = cap
        self.parts = []
        self.size = 0

    def write(self, s):
        if self.size < self.cap:
            chunk = s[: self.cap - self.size]
            self.parts.append(chunk)
            self.size += len(chunk)
        return len(s)

    def text(self):
        return "".join(self.parts)


class UnitFailure(Exception):
    def __init__(self, etype, message, line=None, unit=None, source_line=None):
        super().__init__(message)
        self.info = {
            "type": etype,
            "message": message,
            "line": line,
            "unit": unit,
            "source_line": source_line,
        }


class Worker:
    def __init__(self, frames_in, frames_out):
        self.frames_in = frames_in
        self.frames_out = frames_out
        self.sources = {}  # unit filename -> list of lines
        self.ns = {"__name__": "generated_units"}
        self.instance = None
        self.cache = OrderedDict()  # solution text -> MySolution
        self.mutations = {}
        self.scratch = tempfile.mkdtemp(prefix="osgen-worker-")
        self.counter = 0

    # ---- framing -------------------------------------------------------
    def read_frame(self):
        header = self._read_exact(4)
        if header is None:
            return None
        (length,) = struct.unpack(">I", header)
        body = self._read_exact(length)
        if body is None:
            return None
        return json.loads(body.decode("utf-8"))

    def _read_exact(self, n):
        buf = b""
        while len(buf) < n:
            chunk = self.frames_in.read(n - len(buf))
            if not chunk:
                return None
            buf += chunk
        return buf

    def write_frame(self, obj):
        body = json.dumps(obj).encode("utf-8")
        self.frames_out.write(struct.pack(">I", len(body)) + body)
        self.frames_out.flush()

    # ---- error mapping -------------------------------------------------
    def describe(self, exc):
        line = None
        unit = None
        if isinstance(exc, SyntaxError) and exc.filename in self.sources:
            line, unit = exc.lineno, exc.filename
        else:
            for frame in traceback.extract_tb(exc.__traceback__):
                if frame.filename in self.sources:
                    line, unit = frame.lineno, frame.filename
        source_line = None
        if unit is not None and line is not None:
            lines = self.sources[unit]
            if 1 <= line <= len(lines):
                source_line = lines[line - 1]
        return UnitFailure(type(exc).__name__, str(exc), line, unit, source_line)

    def guarded(self, fn, *args):
        """Runs generated code with stdout captured; returns (result, output)."""
        stream = _CappedStream(OUTPUT_CAP)
        saved = sys.stdout
        sys.stdout = stream
        try:
            return fn(*args), stream.text()
        except UnitFailure:
            raise
        except BaseException as exc:  # generated code may raise anything
            if isinstance(exc, KeyboardInterrupt):
                raise
            raise self.describe(exc) from None
        finally:
            sys.stdout = saved

    # ---- solutions -----------------------------------------------------
    def _path(self, stem):
        self.counter += 1
        return os.path.join(self.scratch, "%s-%d.txt" % (stem, self.counter))

    def need_instance(self):
        if self.instance is None:
            raise UnitFailure("ProtocolError", "no instance loaded")
        return self.instance

    def cls(self, name):
        if name not in self.ns:
            raise UnitFailure("MissingInterface", "class %s is not defined" % name)
        return self.ns[name]

    def to_text(self, sol):
        path = self._path("out")
        try:
            self.guarded(sol.save_to_file, path)
            with open(path, "r") as f:
                text = f.read()
        finally:
            if os.path.exists(path):
                os.remove(path)
        self.remember(text, sol)
        return text

    def remember(self, text, sol):
        self.cache[text] = sol
        self.cache.move_to_end(text)
        while len(self.cache) > CACHE_SIZE:
            self.cache.popitem(last=False)

    def from_text(self, text):
        if text in self.cache:
            self.cache.move_to_end(text)
            return self.cache[text]
        inst = self.need_instance()
        path = self._path("in")
        with open(path, "w") as f:
            f.write(text)
        try:
            sol, _ = self.guarded(self.cls("MySolution"), inst)
            self.guarded(sol.load_from_file, path)
        finally:
            os.remove(path)
        self.remember(text, sol)
        return sol

    def clone(self, sol):
        memo = {id(self.instance): self.instance}
        return copy.deepcopy(sol, memo)

    def objective_of(self, sol):
        value, _ = self.guarded(sol.get_objective)
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise UnitFailure("BadObjective", "get_objective returned %r, expected a number" % (value,))
        if not isinstance(value, int):
            value = float(value)
            if not math.isfinite(value):
                raise UnitFailure("BadObjective", "get_objective returned %r, expected a finite number" % (value,))
        return value

    # ---- operations ----------------------------------------------------
    def op_hello(self, args):
        return {"python": sys.version.split()[0], "pid": os.getpid()}

    def op_static_check(self, args):
        source = args["source"]
        class_name = args["class_name"]
        methods = args.get("methods", [])
        filename = "<unit:check>"
        try:
            tree = ast.parse(source, filename=filename)
        except SyntaxError as exc:
            lines = source.splitlines()
            line = exc.lineno
            text = lines[line - 1] if line and 1 <= line <= len(lines) else None
            return {
                "passed": False,
                "kind": "static-error",
                "type": "SyntaxError",
                "message": exc.msg,
                "line": line,
                "source_line": text,
            }
        classes = [n for n in tree.body if isinstance(n, ast.ClassDef) and n.name == class_name]
        if not classes:
            return {
                "passed": False,
                "kind": "missing-interface",
                "type": "MissingInterface",
                "message": "class %s is not defined" % class_name,
                "missing": class_name,
            }
        defined = {}
        for node in classes[-1].body:
            if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
                defined[node.name] = node
        for method in methods:
            name, arity = method["name"], method["arity"]
            node = defined.get(name)
            if node is None:
                return {
                    "passed": False,
                    "kind": "missing-interface",
                    "type": "MissingInterface",
                    "message": "%s.%s is not defined" % (class_name, name),
                    "missing": name,
                }
            a = node.args
            positional = len(a.posonlyargs) + len(a.args)
            required = positional - len(a.defaults)
            if not (required <= arity <= positional or (a.vararg is not None and required <= arity)):
                return {
                    "passed": False,
                    "kind": "missing-interface",
                    "type": "MissingInterface",
                    "message": "%s.%s must accept %d positional parameter(s) including self"
                    % (class_name, name, arity),
                    "missing": name,
                    "line": node.lineno,
                    "source_line": source.splitlines()[node.lineno - 1],
                }
        return {"passed": True}

    def op_parses(self, args):
        try:
            ast.parse(args["source"])
            return {"parses": True}
        except (SyntaxError, ValueError):
            return {"parses": False}

    def op_load_units(self, args):
        for unit in args["units"]:
            filename = "<unit:%s>" % unit["name"]
            source = unit["source"]
            self.sources[filename] = source.splitlines()
            try:
                code = compile(source, filename, "exec")
            except SyntaxError as exc:
                raise self.describe(exc) from None
            self.guarded(exec, code, self.ns)
        self.cache.clear()
        self.mutations.clear()
        return {"loaded": [u["name"] for u in args["units"]]}

    def op_seed(self, args):
        self.seed(args["value"])
        return {}

    def seed(self, value):
        random.seed(value)
        np = sys.modules.get("numpy")
        if np is not None:
            try:
                np.random.seed(value % (2**32))
            except Exception:
                pass

    def op_load_instance(self, args):
        self.instance = None
        self.cache.clear()
        self.instance, _ = self.guarded(self.cls("MyInstance"), args["path"])
        return {}

    def op_random_solution(self, args):
        inst = self.need_instance()
        if "seed" in args:
            self.seed(args["seed"])
        sol, _ = self.guarded(self.cls("MySolution"), inst)
        return {"solution": self.to_text(sol)}

    def op_is_feasible(self, args):
        sol = self.from_text(args["solution"])
        result, output = self.guarded(sol.is_feasible)
        return {"feasible": bool(result), "diagnostic": output}

    def op_get_objective(self, args):
        return {"objective": self.objective_of(self.from_text(args["solution"]))}

    def op_save_solution(self, args):
        sol = self.from_text(args["solution"])
        self.guarded(sol.save_to_file, args["path"])
        return {}

    def op_load_solution(self, args):
        inst = self.need_instance()
        sol, _ = self.guarded(self.cls("MySolution"), inst)
        self.guarded(sol.load_from_file, args["path"])
        return {"solution": self.to_text(sol)}

    def op_apply_mutation(self, args):
        name = args["name"]
        if "seed" in args:
            self.seed(args["seed"])
        sol = self.clone(self.from_text(args["solution"]))
        mutation = self.mutations.get(name)
        if mutation is None:
            mutation, _ = self.guarded(self.cls(name))
            self.mutations[name] = mutation
        self.guarded(mutation.apply, sol)
        payload = {"solution": self.to_text(sol)}
        if args.get("with_objective"):
            payload["objective"] = self.objective_of(sol)
        return payload

    def op_run_algorithm(self, args):
        inst = self.need_instance()
        if "seed" in args:
            self.seed(args["seed"])
        algorithm, _ = self.guarded(self.cls("MyAlgorithm"))
        start = time.monotonic()
        sol, _ = self.guarded(algorithm.solve, inst, int(args["time_budget_ms"]))
        elapsed = (time.monotonic() - start) * 1000.0
        if sol is None or not hasattr(sol, "save_to_file"):
            raise UnitFailure("BadResult", "MyAlgorithm.solve returned %r, expected a MySolution" % (sol,))
        return {"solution": self.to_text(sol), "elapsed_ms": elapsed}

    def serve(self):
        while True:
            try:
                request = self.read_frame()
            except (ValueError, UnicodeDecodeError) as exc:
                self.write_frame({"ok": False, "error": {"type": "ProtocolError", "message": str(exc)}})
                return
            if request is None:
                return
            op = request.get("op")
            if op == "shutdown":
                self.write_frame({"ok": True, "payload": {}})
                return
            handler = getattr(self, "op_" + str(op), None)
            if handler is None:
                self.write_frame(
                    {"ok": False, "error": {"type": "ProtocolError", "message": "unknown op %r" % op}}
                )
                continue
            try:
                payload = handler(request.get("args", {}))
                self.write_frame({"ok": True, "payload": payload})
            except UnitFailure as failure:
                self.write_frame({"ok": False, "error": failure.info})
            except Exception as exc:  # worker-side defect
                self.write_frame(
                    {"ok": False, "error": {"type": "WorkerError", "message": "%s: %s" % (type(exc).__name__, exc)}}
                )


def main():
    # Keep private copies of the frame streams; generated code printing or
    # reading the standard streams must not disturb the protocol.
    frames_in = os.fdopen(os.dup(0), "rb", buffering=0)
    frames_out = os.fdopen(os.dup(1), "wb")
    devnull = os.open(os.devnull, os.O_RDWR)
    os.dup2(devnull, 0)
    os.dup2(devnull, 1)
    sys.stdin = open(os.devnull, "r")
    sys.stdout = open(os.devnull, "w")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))
    worker = Worker(frames_in, frames_out)
    try:
        worker.serve()
    finally:
        shutil.rmtree(worker.scratch, ignore_errors=True)


if __name__ == "__main__":
    main()
