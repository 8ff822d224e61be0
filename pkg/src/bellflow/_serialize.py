"""Deterministic JSON/CSV emission for CLI artifacts.

Floats are rendered with 17 significant digits, which round-trips every
double exactly; key order is insertion order and indentation is fixed, so
identical payloads serialize to identical bytes.
"""
import json
import numbers


def format_float(value) -> str:
    return format(float(value), ".17g")


def _emit(obj, depth, out):
    pad = "  " * depth
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _emit(value, depth + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not len(obj):
            out.append("[]")
            return
        out.append("[\n")
        for i, value in enumerate(obj):
            out.append(pad + "  ")
            _emit(value, depth + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif obj is None:
        out.append("null")
    elif isinstance(obj, (bool,)) or type(obj).__name__ == "bool_":
        out.append("true" if obj else "false")
    elif isinstance(obj, numbers.Integral):
        out.append(str(int(obj)))
    elif isinstance(obj, numbers.Real):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    out = []
    _emit(obj, 0, out)
    out.append("\n")
    return "".join(out)


def csv_cell(value) -> str:
    if isinstance(value, bool) or type(value).__name__ == "bool_":
        return "1" if value else "0"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(value)
    return str(value)


def csv_line(values) -> str:
    return ",".join(csv_cell(v) for v in values)
