"""Reading and writing algebra and subspace manifests."""
from __future__ import annotations

import json
import logging
import os
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from crlab.cli.schemas import AlgebraManifest, BracketEntry, BracketTerm, SubspaceManifest
from crlab.core.scalars import Q, QI, Field, field_of, format_scalar, imag_part, parse_scalar
from crlab.core.subspace import Subspace
from crlab.errors import CRLabError, ManifestError, UsageError
from crlab.lie.algebra import LieAlgebra
from crlab.lie.matrices import from_matrices
from crlab.lie.presets import Preset, preset

logger = logging.getLogger(__name__)

PRESET_PREFIX = "preset:"


class ManifestStore:
    """Resolves ``ALG`` and ``SUB`` arguments: a JSON path or ``preset:...``.

    The last preset loaded is remembered so that ``preset:KEY`` subspace
    arguments refer to its canonical subspaces.
    """

    def __init__(self):
        self.preset: Optional[Preset] = None
        self._cache: Dict[str, Preset] = {}

    def _read(self, path: str) -> dict:
        try:
            with open(path, "r") as f:
                return json.load(f)
        except OSError as e:
            raise ManifestError(f"cannot read {path}: {e.strerror}", path=path)
        except json.JSONDecodeError as e:
            raise ManifestError(f"{path} is not valid JSON: {e.msg}", path=path, line=e.lineno)

    def load_preset(self, name: str) -> Preset:
        if name not in self._cache:
            self._cache[name] = preset(name)
        return self._cache[name]

    def load_algebra(self, arg: str) -> LieAlgebra:
        if arg.startswith(PRESET_PREFIX):
            self.preset = self.load_preset(arg[len(PRESET_PREFIX):])
            return self.preset.algebra
        self.preset = None
        data = self._read(arg)
        try:
            manifest = AlgebraManifest.model_validate(data)
        except ValidationError as e:
            raise ManifestError(f"{arg} is not an algebra manifest", path=arg, problems=e.errors(include_url=False))
        algebra = self.algebra_from_manifest(manifest, arg)
        logger.debug("loaded %s from %s", algebra.name, arg)
        return algebra

    def algebra_from_manifest(self, manifest: AlgebraManifest, source: str = "<manifest>") -> LieAlgebra:
        try:
            field = field_of(manifest.field)
            if manifest.matrices is not None:
                algebra, _ = from_matrices(manifest.matrices, field, manifest.basis or None, manifest.name)
                self._check_dim(manifest, algebra.dim, source)
                return algebra
            basis = list(manifest.basis) or [f"e{n + 1}" for n in range(manifest.dim or 0)]
            self._check_dim(manifest, len(basis), source)
            if isinstance(manifest.brackets, dict):
                brackets = self._labelled_brackets(manifest.brackets, basis)
            else:
                brackets = {}
                for entry in manifest.brackets:
                    if not 0 <= entry.i < entry.j < len(basis):
                        raise ManifestError(
                            f"{source}: bracket ({entry.i}, {entry.j}) needs 0 <= i < j < {len(basis)}",
                            path=source,
                            i=entry.i,
                            j=entry.j,
                        )
                    if (entry.i, entry.j) in brackets:
                        raise ManifestError(f"{source}: bracket ({entry.i}, {entry.j}) given twice", path=source)
                    brackets[(entry.i, entry.j)] = {t.k: t.c for t in entry.terms}
            return LieAlgebra(manifest.name, field, basis, brackets)
        except KeyError as e:
            raise ManifestError(f"{source}: unknown basis label {e.args[0]!r}", path=source)
        except CRLabError:
            raise
        except ValueError as e:
            raise ManifestError(f"{source}: {e}", path=source)

    @staticmethod
    def _check_dim(manifest: AlgebraManifest, dim: int, source: str) -> None:
        if manifest.dim is not None and manifest.dim != dim:
            raise ManifestError(
                f"{source}: dim {manifest.dim} but {dim} basis elements",
                path=source,
                expected=manifest.dim,
                got=dim,
            )

    @staticmethod
    def _labelled_brackets(table: Dict[str, Dict[str, str]], basis: List[str]) -> Dict[Tuple[int, int], Dict[int, str]]:
        index = {label: k for k, label in enumerate(basis)}
        brackets: Dict[Tuple[int, int], Dict[int, str]] = {}
        for key, terms in table.items():
            left, _, right = key.partition(",")
            i, j = index[left.strip()], index[right.strip()]
            values = {index[label]: value for label, value in terms.items()}
            if i > j:
                i, j = j, i
                values = {k: format_scalar(-parse_scalar(v)) for k, v in values.items()}
            brackets[(i, j)] = values
        return brackets

    def load_subspace(self, arg: str, algebra: LieAlgebra) -> Subspace:
        if arg.startswith(PRESET_PREFIX):
            key = arg[len(PRESET_PREFIX):]
            if self.preset is None or self.preset.algebra is not algebra:
                raise UsageError(f"{arg} needs a preset algebra", subspace=arg)
            if key not in self.preset.subspaces:
                raise UsageError(
                    f"preset {algebra.name} has no subspace {key!r}",
                    subspace=key,
                    known=sorted(self.preset.subspaces),
                )
            return self.preset.subspaces[key]
        data = self._read(arg)
        if isinstance(data, list):
            data = {"vectors": data}
        try:
            manifest = SubspaceManifest.model_validate(data)
        except ValidationError as e:
            raise ManifestError(f"{arg} is not a subspace manifest", path=arg, problems=e.errors(include_url=False))
        return self.subspace_from_manifest(manifest, algebra, arg)

    def subspace_from_manifest(self, manifest: SubspaceManifest, algebra: LieAlgebra, source: str = "<manifest>") -> Subspace:
        for v in manifest.vectors:
            if len(v) != algebra.dim:
                raise ManifestError(
                    f"{source}: vector of length {len(v)} for {algebra.name} of dimension {algebra.dim}",
                    path=source,
                    expected=algebra.dim,
                    got=len(v),
                )
        try:
            field = field_of(manifest.field) if manifest.field is not None else self._infer_field(manifest.vectors)
            return Subspace.span(manifest.vectors, algebra.dim, field)
        except ValueError as e:
            raise ManifestError(f"{source}: {e}", path=source)

    @staticmethod
    def _infer_field(vectors: List[List[str]]) -> Field:
        """``Q(i)`` as soon as one entry has a nonzero imaginary part."""
        complex_entry = any(imag_part(parse_scalar(c)) for v in vectors for c in v)
        return QI if complex_entry else Q

    @staticmethod
    def algebra_manifest(a: LieAlgebra) -> AlgebraManifest:
        brackets = [
            BracketEntry(i=i, j=j, terms=[BracketTerm(k=k, c=format_scalar(c)) for k, c in terms])
            for (i, j), terms in sorted(a.structure.items())
        ]
        return AlgebraManifest(name=a.name, field=a.field.name, dim=a.dim, basis=list(a.basis), brackets=brackets)

    @staticmethod
    def subspace_manifest(s: Subspace, name: Optional[str] = None) -> SubspaceManifest:
        return SubspaceManifest(field=s.field.name, vectors=s.to_json(), name=name)

    def write_preset(self, name: str, out: str) -> List[str]:
        """Write ``algebra.json`` and one ``KEY.json`` per canonical subspace; returns the paths."""
        p = self.load_preset(name)
        os.makedirs(out, exist_ok=True)
        written = []
        documents = {"algebra": self.algebra_manifest(p.algebra)}
        documents.update({key: self.subspace_manifest(s, key) for key, s in sorted(p.subspaces.items())})
        for key, document in documents.items():
            path = os.path.join(out, f"{key}.json")
            with open(path, "w") as f:
                f.write(document.model_dump_json(indent=2, exclude_none=True))
                f.write("\n")
            written.append(path)
        logger.info("wrote preset %s to %s", name, out)
        return written
