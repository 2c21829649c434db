"""End-to-end orchestration of the inequality search.

Runs the five-step computation (candidate one-parameter subgroups, isotropy
filter, Weyl element enumeration, dominance test, birationality test) for a
representation, optionally accelerated by the fast filters, and serializes
the resulting irredundant inequality list.  A stored inequality is a pair
(tau, w) whose normal vector w.tau cuts out one facet of the moment cone:
a dominant weight lambda lies in the cone iff <w.tau, lambda> <= 0 for every
stored pair (plus the dominance inequalities, emitted separately).
"""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from .birationality import is_birational
from .bkr import bkr_verdict
from .dominance import is_dominant, is_dominant_symbolic
from .fastfilters import groebner_verdict, lin_tri_verdict
from .isotropy import check_C0
from .roots import RepSpec, apply_w_to_tau, perm_to_inversions
from .taufilter import step2
from .tausearch import enumerate_tau_plus
from .weylsearch import step3

CHECKPOINT_VERSION = 1


class InteriorError(RuntimeError):
    """The non-empty-interior hypothesis (trivial generic isotropy) fails."""


class SeedDisagreement(RuntimeError):
    """Probabilistic stages gave different answers under different seeds."""


@dataclass
class RunConfig:
    spec: RepSpec
    stages: tuple = (1, 2, 3, 4, 5)
    filters: tuple = ()          # subset of {'lin-tri', 'bkr', 'grobner'}
    seed: int = 0
    verify_seeds: tuple = ()     # extra seeds; stages 4-5 must agree on all
    symbolic: str = "never"      # 'never' | 'on-reject' | 'always'
    symmetry: bool = True
    output: str = None
    fmt: str = "json"            # 'json' | 'text'
    jobs: int = 1
    budget_ms: int = 60000
    checkpoint: str = None

    def __post_init__(self):
        if self.symbolic not in ("never", "on-reject", "always"):
            raise ValueError("bad symbolic policy %r" % (self.symbolic,))
        bad = set(self.filters) - {"lin-tri", "bkr", "grobner"}
        if bad:
            raise ValueError("unknown filters %r" % (sorted(bad),))
        ks = sorted(self.stages)
        if not ks or ks != list(range(ks[0], ks[-1] + 1)) or ks[0] < 1 or ks[-1] > 5:
            raise ValueError("stages must be a contiguous range within 1..5")


def _spec_key(spec):
    return [spec.kind, list(spec.dims), spec.r]


def _ckpt_path(config, stage):
    return os.path.join(config.checkpoint, "stage%d.json" % stage)


def _ckpt_save(config, stage, data):
    if config.checkpoint is None:
        return
    os.makedirs(config.checkpoint, exist_ok=True)
    blob = {"version": CHECKPOINT_VERSION, "spec": _spec_key(config.spec),
            "seed": config.seed, "symmetry": config.symmetry,
            "stage": stage, "data": data}
    with open(_ckpt_path(config, stage), "w") as fh:
        json.dump(blob, fh, sort_keys=True)


def _ckpt_load(config, stage):
    if config.checkpoint is None:
        return None
    path = _ckpt_path(config, stage)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        blob = json.load(fh)
    if (blob.get("version") != CHECKPOINT_VERSION
            or blob.get("spec") != _spec_key(config.spec)
            or blob.get("seed") != config.seed
            or blob.get("symmetry") != config.symmetry
            or blob.get("stage") != stage):
        raise RuntimeError("checkpoint %s does not match the run config" % path)
    return blob["data"]


def _tau_from_json(t):
    return tuple(t)


def _pair_from_json(p):
    tau, w = p
    return tuple(tau), tuple(tuple(b) for b in w)


def _pair_to_json(p):
    tau, w = p
    return [list(tau), [list(b) for b in w]]


def _stage4_one(args):
    spec, tau, w, seed, symbolic = args
    if symbolic == "always":
        return is_dominant_symbolic(spec, tau, w)
    ok = is_dominant(spec, tau, w, seed=seed)
    if not ok and symbolic == "on-reject":
        ok = is_dominant_symbolic(spec, tau, w)
    return ok


def _stage5_one(args):
    """Decide one pair; returns (accepted, provenance)."""
    spec, tau, w, seed, filters, budget = args
    if "lin-tri" in filters and lin_tri_verdict(spec, tau, w) == "birational":
        return True, "lin-tri:birational"
    if "bkr" in filters and bkr_verdict(spec, tau, w) == "not birational":
        return False, "bkr:not-birational"
    if "grobner" in filters:
        v = groebner_verdict(spec, tau, w, seed=seed, generic=True, budget=budget)
        if v != "inconclusive":
            return v == "birational", "grobner:%s" % v.replace(" ", "-")
    v = is_birational(spec, tau, w, seed=seed)
    return v, "exact:%s" % ("birational" if v else "not-birational")


def _pmap(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(it) for it in items]


def run(config):
    """Execute the configured stages; returns a report dictionary.

    The report holds per-stage candidate counts and wall times, the final
    inequality records and the dominance inequalities.  When an output path
    is configured the inequality list is also written there (timings are
    kept out of the file so equal-seed runs are byte-identical).
    """
    spec = config.spec
    report = {"spec": _spec_key(spec), "seed": config.seed,
              "symmetry": config.symmetry, "filters": sorted(config.filters),
              "stages": {}, "c0": None}

    first, last = min(config.stages), max(config.stages)
    if first == 1:
        ok = check_C0(spec, seed=config.seed)
        report["c0"] = ok
        if not ok:
            if spec.kind == "fermion" and spec.dims[0] == 2 * spec.r:
                report["c0_note"] = ("generic isotropy is non-trivial for the "
                                     "self-dual exterior power; continuing with "
                                     "the relative isotropy criterion")
            else:
                raise InteriorError(
                    "the group has non-trivial generic isotropy on this "
                    "representation, so the cone has empty interior and the "
                    "facet search does not apply")

    data = None
    if first > 1:
        prev = _ckpt_load(config, first - 1)
        if prev is None:
            raise RuntimeError("stage %d needs a stage-%d checkpoint" % (first, first - 1))
        if first - 1 in (1, 2):
            data = [_tau_from_json(t) for t in prev]
        else:
            data = [_pair_from_json(p) for p in prev]

    for stage in range(first, last + 1):
        t0 = time.time()
        if stage == 1:
            data = enumerate_tau_plus(spec, mod_symmetry=config.symmetry)
            saved = [list(t) for t in data]
        elif stage == 2:
            data = step2(spec, data, seed=config.seed)
            saved = [list(t) for t in data]
        elif stage == 3:
            data = step3(spec, data, mod_symmetry=config.symmetry)
            saved = [_pair_to_json(p) for p in data]
        elif stage == 4:
            args = [(spec, t, w, config.seed, config.symbolic) for t, w in data]
            keep = _pmap(_stage4_one, args, config.jobs)
            for extra in config.verify_seeds:
                args = [(spec, t, w, extra, config.symbolic) for t, w in data]
                if _pmap(_stage4_one, args, config.jobs) != keep:
                    raise SeedDisagreement("dominance verdicts differ between seeds")
            data = [p for p, ok in zip(data, keep) if ok]
            saved = [_pair_to_json(p) for p in data]
        else:
            budget = config.budget_ms / 1000.0
            args = [(spec, t, w, config.seed, config.filters, budget)
                    for t, w in data]
            out = _pmap(_stage5_one, args, config.jobs)
            for extra in config.verify_seeds:
                args = [(spec, t, w, extra, config.filters, budget)
                        for t, w in data]
                redo = _pmap(_stage5_one, args, config.jobs)
                if [ok for ok, _ in redo] != [ok for ok, _ in out]:
                    raise SeedDisagreement("birationality verdicts differ between seeds")
            data = [(p, prov) for p, (ok, prov) in zip(data, out) if ok]
            saved = [[_pair_to_json(p), prov] for p, prov in data]
        _ckpt_save(config, stage, saved)
        report["stages"][stage] = {"count": len(data),
                                   "seconds": round(time.time() - t0, 3)}

    if last == 5:
        records = [inequality_record(spec, tau, w, prov) for (tau, w), prov in data]
        report["records"] = records
        report["dominance"] = dominance_inequalities(spec)
        if config.output:
            write_inequalities(config.output, spec, records,
                               report["dominance"], config.fmt)
    return report


def inequality_record(spec, tau, w, provenance="exact:birational"):
    """Serializable description of one facet inequality <w.tau, lambda> <= 0."""
    return {"tau": list(tau),
            "w": [list(b) for b in w],
            "phi": [list(r) for r in sorted(perm_to_inversions(spec, w))],
            "normal": list(apply_w_to_tau(spec, w, tau)),
            "provenance": provenance}


def dominance_inequalities(spec):
    """Normals of lambda_i >= lambda_{i+1} per factor, as <n, lambda> <= 0."""
    out = []
    off = 0
    for d in spec.dims:
        for i in range(d - 1):
            v = [0] * spec.n
            v[off + i] = -1
            v[off + i + 1] = 1
            out.append(v)
        off += d
    return out


def write_inequalities(path, spec, records, dominance, fmt="json"):
    with open(path, "w") as fh:
        if fmt == "json":
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.write(json.dumps({"summary": {"spec": _spec_key(spec),
                                             "facets": len(records),
                                             "dominance": dominance}},
                                sort_keys=True) + "\n")
        else:
            fh.write("# facet normals (<n, lambda> <= 0)\n")
            for rec in records:
                fh.write(" ".join(str(c) for c in rec["normal"]) + "\n")
            fh.write("# dominance normals\n")
            for n in dominance:
                fh.write(" ".join(str(c) for c in n) + "\n")


def read_inequalities(path):
    """Load a JSON-lines inequality file; returns (spec, records, dominance)."""
    records, summary = [], None
    with open(path) as fh:
        for line in fh:
            obj = json.loads(line)
            if "summary" in obj:
                summary = obj["summary"]
            else:
                records.append(obj)
    if summary is None:
        raise ValueError("missing summary line in %s" % path)
    kind, dims, r = summary["spec"]
    return RepSpec(kind, tuple(dims), r), records, summary["dominance"]


def _block_permutations(spec):
    """Permutations of the factors preserving dimensions, as index tuples."""
    groups = {}
    for k, d in enumerate(spec.dims):
        groups.setdefault(d, []).append(k)
    perms = [{}]
    for idxs in groups.values():
        perms = [{**p, **dict(zip(idxs, img))}
                 for p in perms for img in permutations(idxs)]
    return [tuple(p[k] for k in range(spec.s)) for p in perms]


def symmetrize_normals(spec, normals):
    """Close a set of inequality normals under permutation of equal factors."""
    out = set()
    for sigma in _block_permutations(spec):
        for n in normals:
            img = []
            for k in sigma:
                img.extend(spec.block(n, k))
            out.add(tuple(img))
    return sorted(out)


def membership(spec, records, dominance, lam):
    """Decide cone membership of a weight given as one partition per factor.

    Returns (bool, violated) where violated lists every failing normal.
    Each partition is padded with zeros to the factor dimension; Kronecker
    weights must have equal block sizes.
    """
    blocks = []
    for k, part in enumerate(lam):
        part = list(part)
        if len(part) > spec.dims[k]:
            raise ValueError("partition %r too long for factor %d" % (part, k))
        if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
            raise ValueError("partition %r is not non-increasing" % (part,))
        blocks.append(part + [0] * (spec.dims[k] - len(part)))
    if len(blocks) != spec.s:
        raise ValueError("expected %d partitions, got %d" % (spec.s, len(blocks)))
    if spec.kind == "kronecker" and len({sum(b) for b in blocks}) != 1:
        raise ValueError("factor degrees differ: %r" % ([sum(b) for b in blocks],))
    vec = [c for b in blocks for c in b]
    normals = symmetrize_normals(spec, [tuple(r["normal"]) for r in records])
    violated = []
    for n in list(normals) + [tuple(d) for d in dominance]:
        if sum(a * b for a, b in zip(n, vec)) > 0:
            violated.append(list(n))
    return not violated, violated


def emit_table(reports):
    """Plain-text comparison table of run reports, grouped by spec."""
    header = ("spec", "step1", "step2", "step3", "step4", "step5", "seconds")
    rows = [header]
    for rep in sorted(reports, key=lambda r: json.dumps(r["spec"])):
        kind, dims, r = rep["spec"]
        name = "%s %s" % (kind, " ".join(str(d) for d in dims))
        if kind != "kronecker":
            name += " r=%d" % r
        counts = [str(rep["stages"].get(str(k), rep["stages"].get(k, {})).get("count", "-"))
                  for k in range(1, 6)]
        total = sum(st["seconds"] for st in rep["stages"].values())
        rows.append((name,) + tuple(counts) + ("%.1f" % total,))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows)
