#!/usr/bin/env python3
"""Smoke test for the rmq2_py extension module.

Locates the compiled cdylib under target/, stages it as an importable
module, and checks the bindings against pure-Python oracles. Exits
nonzero on the first failure.

Build the extension first:  cargo build -p rmq2-py
"""

import random
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module(tmp: Path) -> None:
    """Copy the built cdylib into tmp under an importable name."""
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("librmq2_py.so", "rmq2_py.so", "librmq2_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("error: extension not built; run `cargo build -p rmq2-py` first")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, tmp / f"rmq2_py{suffix}")
    sys.path.insert(0, str(tmp))


def brute_rmq(values, i, j, tie):
    """1-based inclusive argmin with explicit tie handling."""
    best = i
    for p in range(i + 1, j + 1):
        v = values[p - 1]
        if v < values[best - 1] or (tie == "rightmost" and v == values[best - 1]):
            best = p
    return best


def check(cond, msg):
    if not cond:
        sys.exit(f"FAIL: {msg}")


def test_rmq(mod, rng):
    for tie in ("rightmost", "leftmost"):
        values = [rng.randrange(-8, 8) for _ in range(150)]
        idx = mod.RmqIndex.build(values, tie)
        check(len(idx) == len(values), "len mismatch")
        check(idx.tie == tie, "tie getter mismatch")
        n = len(values)
        for _ in range(400):
            i = rng.randrange(1, n + 1)
            j = rng.randrange(i, n + 1)
            got = idx.query(i, j)
            want = brute_rmq(values, i, j, tie)
            check(got == want, f"query({i},{j}) tie={tie}: got {got}, want {want}")

    # Default tie policy is rightmost.
    dup = mod.RmqIndex.build([5, 5, 5])
    check(dup.query(1, 3) == 3, "default tie should be rightmost")
    check(dup.tie == "rightmost", "default tie getter")

    # parent/lca sanity on a known shape: strictly increasing values form
    # a leftmost-path tree, so lca(i, j) == min(i, j) and parent(v) == v-1.
    chain = mod.RmqIndex.build(list(range(1, 21)), "rightmost")
    for v in range(2, 21):
        check(chain.parent(v) == v - 1, f"parent({v}) on chain")
    check(chain.parent(1) == 0, "parent of root")
    for _ in range(50):
        a = rng.randrange(1, 21)
        b = rng.randrange(1, 21)
        check(chain.lca(a, b) == min(a, b), f"lca({a},{b}) on chain")

    # Serialization round-trip must preserve answers bit-for-bit.
    values = [rng.randrange(-100, 100) for _ in range(64)]
    idx = mod.RmqIndex.build(values, "leftmost")
    blob = idx.serialize()
    check(isinstance(blob, bytes) and blob[:4] == b"RMQ2", "container magic")
    back = mod.RmqIndex.deserialize(blob)
    for i in range(1, 65):
        for j in range(i, 65):
            check(back.query(i, j) == idx.query(i, j), "round-trip query drift")
    check(back.serialize() == blob, "re-serialization not identical")

    # Errors surface as ValueError.
    for bad in ((0, 3), (3, 2), (1, 999)):
        try:
            idx.query(*bad)
        except ValueError:
            pass
        else:
            sys.exit(f"FAIL: query{bad} should raise ValueError")
    try:
        mod.RmqIndex.build([1, 2], "middle")
    except ValueError:
        pass
    else:
        sys.exit("FAIL: bad tie policy should raise ValueError")

    sb = idx.size_breakdown()
    check(sb["total"] == sum(v for k, v in sb.items()
                             if k not in ("total", "aux", "bits_per_element")),
          "size breakdown total mismatch")
    check(sb["aux"] == sb["total"] - sb["dfuds"], "aux bits mismatch")
    print("ok: RmqIndex build/query/parent/lca/serialize")


def test_doclist(mod, rng):
    docs = [
        b"the quick brown fox",
        b"jumps over the lazy dog",
        b"pack my box with five dozen liquor jugs",
        b"the five boxing wizards jump quickly",
    ]
    idx = mod.DocIndex.build(docs)
    check(idx.num_docs == len(docs), "num_docs mismatch")
    # Concatenated text: each document plus a separator, plus one terminator.
    check(idx.text_len == sum(len(d) for d in docs) + len(docs) + 1,
          "text_len mismatch")

    patterns = [b"the", b"five", b"qu", b"jump", b"o", b"zebra", b" "]
    # Every substring up to length 3 as well, to exercise dense cases.
    for d in docs:
        for size in (1, 2, 3):
            for s in range(len(d) - size + 1):
                patterns.append(d[s:s + size])
    for pat in patterns:
        got = idx.list_docs(pat)
        want = [i + 1 for i, d in enumerate(docs) if pat in d]
        check(got == want, f"list_docs({pat!r}): got {got}, want {want}")

    # doc_of maps concatenated-text positions back to document ids;
    # separators belong to the document they follow, the terminator to the
    # sentinel id k + 1.
    pos = 1
    for i, d in enumerate(docs):
        for _ in range(len(d) + 1):
            check(idx.doc_of(pos) == i + 1, f"doc_of({pos})")
            pos += 1
    check(idx.doc_of(pos) == len(docs) + 1, "doc_of(terminator)")

    blob = idx.serialize()
    back = mod.DocIndex.deserialize(blob)
    check(back.list_docs(b"the") == idx.list_docs(b"the"), "doclist round-trip")
    check(back.serialize() == blob, "doclist re-serialization not identical")

    # Random corpus against the substring oracle.
    docs = [bytes(rng.choice(b"abc") for _ in range(rng.randrange(1, 40)))
            for _ in range(12)]
    idx = mod.DocIndex.build(docs)
    for _ in range(300):
        plen = rng.randrange(1, 5)
        pat = bytes(rng.choice(b"abc") for _ in range(plen))
        got = idx.list_docs(pat)
        want = [i + 1 for i, d in enumerate(docs) if pat in d]
        check(got == want, f"random list_docs({pat!r}): got {got}, want {want}")

    try:
        mod.DocIndex.build([b"ok", b"bad\x00byte"])
    except ValueError:
        pass
    else:
        sys.exit("FAIL: NUL byte in document should raise ValueError")
    print("ok: DocIndex build/list_docs/doc_of/serialize")


def main():
    with tempfile.TemporaryDirectory() as tmp:
        stage_module(Path(tmp))
        import rmq2_py
        print(f"imported rmq2_py {rmq2_py.__version__}")
        rng = random.Random(0x512E)
        test_rmq(rmq2_py, rng)
        test_doclist(rmq2_py, rng)
    print("smoke test passed")


if __name__ == "__main__":
    main()
