"""Command line front end.

Exit codes: 0 ok, 1 verification failed, 2 usage or parse error, 3 I/O
error, 4 geometry error (a sample hit the projection pole).
"""

import argparse
import json
import sys
import time

from . import __version__
from .census import classify_all, enumerate_closed_surfaces
from .cells import parse_face_list
from .errors import AtProjectionPole, HypersurfError, UnsupportedDimension
from .projection import DEFAULT_SUBDIVISION, format_obj, project_complex
from .surfaces import BUILTINS, MOEBIUS, FaceComplex, SurfaceReport, classify_surface, is_closed_surface
from .symmetry import SignedPermutation

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO, EXIT_GEOMETRY = 0, 1, 2, 3, 4

LABEL_CONVENTION = (
    "single-sphere classes are labelled A, B, ... in order of "
    "(orbit size, face count, canonical form); other classes carry their surface name"
)

EXPECTED = {
    "moebius": dict(name=MOEBIUS, euler_characteristic=0, orientable=False, boundary_components=1),
    "torus": dict(name="T2", euler_characteristic=0, orientable=True, boundary_components=0),
    "sphere": dict(name="S2", euler_characteristic=2, orientable=True, boundary_components=0),
    "two_spheres": dict(name="S2 ⊔ S2", euler_characteristic=4, orientable=True, boundary_components=0),
}


class UsageError(Exception):
    pass


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def census_payload(surfaces, n=4):
    return {
        "n": n,
        "surfaces": [
            {"faces": s.face_strings(), "report": classify_surface(s).to_dict()} for s in surfaces
        ],
    }


def classes_payload(classes):
    return {
        "label_convention": LABEL_CONVENTION,
        "classes": [
            {
                "label": c["label"],
                "canonical": c["canonical"],
                "orbit_size": c["orbit_size"],
                "stabilizer_order": c["stabilizer_order"],
                "members": c["members"],
                "report": c["report"].to_dict(),
            }
            for c in classes
        ],
    }


def load_census(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        n = int(data["n"])
        surfaces = [FaceComplex(s["faces"], n) for s in data["surfaces"]]
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"malformed census file {path}: {err}") from None
    if not surfaces:
        raise UsageError(f"census file {path} lists no surfaces")
    for s in surfaces:
        if not is_closed_surface(s):
            raise UsageError(f"census entry {','.join(s.face_strings())} is not a closed surface")
    return n, surfaces


def load_classes(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        return [dict(c, report=SurfaceReport.from_dict(c["report"])) for c in data["classes"]]
    except (KeyError, TypeError) as err:
        raise UsageError(f"malformed classes file {path}: {err}") from None


def pick_class(classes, which):
    if which.isdigit():
        i = int(which)
        if not 0 <= i < len(classes):
            raise UsageError(f"class index {i} out of range 0..{len(classes) - 1}")
        return classes[i]
    for c in classes:
        if c["label"] == which or c["report"].name == which:
            return c
    raise UsageError(f"no class labelled {which!r}")


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args):
    if args.n != 4:
        raise UnsupportedDimension(f"census supports n=4 only, got n={args.n}")
    surfaces = enumerate_closed_surfaces(args.n, threads=args.threads)
    write_text(args.out, dumps(census_payload(surfaces, args.n)))
    return {"outputs": [args.out], "counts": {"surfaces": len(surfaces)}}


def cmd_classify(args):
    _, surfaces = load_census(args.inp)
    classes = classify_all(surfaces)
    write_text(args.out, dumps(classes_payload(classes)))
    return {
        "inputs": [args.inp],
        "outputs": [args.out],
        "counts": {"classes": len(classes), "surfaces": sum(c["members"] for c in classes)},
    }


def cmd_verify(args):
    if args.builtin not in BUILTINS:
        raise UsageError(f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTINS)}")
    complex_ = BUILTINS[args.builtin]()
    report = classify_surface(complex_)
    print(f"faces: {','.join(complex_.face_strings())}")
    for key, value in report.to_dict().items():
        print(f"{key}: {value}")
    failed = [k for k, v in EXPECTED[args.builtin].items() if getattr(report, k) != v]
    for k in failed:
        print(f"FAIL {k}: expected {EXPECTED[args.builtin][k]!r}, got {getattr(report, k)!r}")
    print("verified" if not failed else "verification FAILED")
    return {
        "counts": {"faces": report.num_faces, "failed_checks": len(failed)},
        "status": EXIT_VERIFY if failed else EXIT_OK,
    }


def cmd_project(args):
    sources = [x is not None for x in (args.faces, args.builtin, args.cls)]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --faces, --builtin, --class")
    if args.faces is not None:
        try:
            complex_ = FaceComplex(parse_face_list(args.faces))
        except HypersurfError as err:
            raise UsageError(f"cannot parse --faces: {err}") from None
    elif args.builtin is not None:
        if args.builtin not in BUILTINS:
            raise UsageError(f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTINS)}")
        complex_ = BUILTINS[args.builtin]()
    else:
        if args.classes:
            classes = load_classes(args.classes)
        else:
            classes = classify_all(enumerate_closed_surfaces(4, threads=args.threads))
        complex_ = FaceComplex(pick_class(classes, args.cls)["canonical"])
    if complex_.n != 4:
        raise UsageError("projection needs faces of Q^4")
    if args.subdiv < 1:
        raise UsageError("--subdiv must be >= 1")
    rotation = None
    if args.rotate:
        try:
            rotation = SignedPermutation.from_json(args.rotate)
        except (ValueError, KeyError, TypeError) as err:
            raise UsageError(f"cannot parse --rotate: {err}") from None
        if rotation.n != 4:
            raise UsageError("--rotate must be an element of B_4")

    mesh = project_complex(complex_, args.subdiv, rotation)
    write_text(args.out, format_obj(mesh, args.triangulate))
    outputs = [args.out]
    inputs = [args.classes] if args.classes else []
    if args.json_out:
        write_text(args.json_out, dumps(mesh.to_dict()))
        outputs.append(args.json_out)
    return {
        "inputs": inputs,
        "outputs": outputs,
        "counts": {
            "faces": len(complex_),
            "vertices": mesh.num_vertices,
            "quads": mesh.num_quads,
            "triangles": 2 * mesh.num_quads if args.triangulate else 0,
        },
    }


# -- plumbing ------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="hypersurf",
        description="Cubical surfaces in the tesseract: census, classification, verification, meshes.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--manifest", help="run manifest path (default: <out>.manifest.json)")
        sp.add_argument("--threads", type=int, default=None, help="worker threads for the census scan")

    e = sub.add_parser("enumerate", help="census of closed surfaces")
    e.add_argument("--n", type=int, default=4)
    e.add_argument("--out", default="census.json")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="group a census into symmetry classes")
    c.add_argument("--in", dest="inp", default="census.json")
    c.add_argument("--out", default="classes.json")
    common(c)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="check a built-in complex against its expected invariants")
    v.add_argument("--builtin", default="moebius")
    common(v)
    v.set_defaults(func=cmd_verify, out=None)

    pr = sub.add_parser("project", help="project a face set to R^3 and write OBJ")
    pr.add_argument("--faces", help='comma separated cells, e.g. "**11,*01*"')
    pr.add_argument("--builtin")
    pr.add_argument("--class", dest="cls", help="class index or label")
    pr.add_argument("--classes", help="classes.json to read classes from (default: recompute)")
    pr.add_argument("--subdiv", type=int, default=DEFAULT_SUBDIVISION)
    pr.add_argument("--rotate", help='signed permutation JSON, e.g. \'{"perm":[4,2,3,1],"flips":[false,false,false,true]}\'')
    pr.add_argument("--triangulate", action="store_true")
    pr.add_argument("--out", default="mesh.obj")
    pr.add_argument("--json-out", help="also dump the mesh as JSON")
    common(pr)
    pr.set_defaults(func=cmd_project)
    return p


def manifest(args, argv, result, elapsed):
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "manifest")}
    return {
        "tool": "hypersurf",
        "version": __version__,
        "command": args.command,
        "argv": list(argv),
        "parameters": params,
        "inputs": result.get("inputs", []),
        "outputs": result.get("outputs", []),
        "counts": result.get("counts", {}),
        "seconds": round(elapsed, 3),
    }


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        result = args.func(args)
    except (UsageError, UnsupportedDimension, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except AtProjectionPole as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_GEOMETRY
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    man = manifest(args, argv, result, time.perf_counter() - t0)
    path = args.manifest or (f"{args.out}.manifest.json" if args.out else None)
    try:
        if path:
            write_text(path, dumps(man))
        else:
            print(dumps(man), file=sys.stderr, end="")
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    return result.get("status", EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())
