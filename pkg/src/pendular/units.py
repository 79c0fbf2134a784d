"""Conversions to reduced variables and the candidate-molecule registry.

Reduced variables with customary units:
    x = mu E / B   = 0.0168 mu(D) E(kV/cm) / B(1/cm)
    y = Omega / B  = 5.04e-9 mu^2(D) / r^3(um) / B(1/cm)
    z = kT / B     = 0.695 T(K) / B(1/cm)
with r = lambda/2 the lattice site spacing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidSpec, MoleculeNotFound

__all__ = [
    "MoleculeSpec",
    "RegistryEntry",
    "ReducedTriple",
    "KHZ_PER_WAVENUMBER",
    "to_reduced",
    "registry",
    "lookup",
    "load_config",
]

X_FACTOR = 0.0168  # per (Debye kV/cm / cm^-1)
Y_FACTOR = 5.04e-9  # per (Debye^2 / um^3 / cm^-1)
Z_FACTOR = 0.695  # per (K / cm^-1)
KHZ_PER_WAVENUMBER = 2.9979e7


@dataclass(frozen=True)
class MoleculeSpec:
    """Molecular constants: dipole (Debye), B (1/cm), lattice wavelength (um)."""

    name: str
    dipole: float
    rotational_constant: float
    lattice_wavelength: float

    def __post_init__(self):
        if min(self.dipole, self.rotational_constant, self.lattice_wavelength) <= 0:
            raise InvalidSpec(f"{self.name}: all molecular constants must be positive")

    @property
    def site_spacing(self) -> float:
        """Lattice site spacing r = lambda/2, in microns."""
        return self.lattice_wavelength / 2.0


@dataclass(frozen=True)
class RegistryEntry:
    """Registry item; spec is None for molecules whose constants must come
    from user config (only a cited reduced coupling is known for them)."""

    name: str
    spec: MoleculeSpec | None
    cited_y: float | None = None


@dataclass(frozen=True)
class ReducedTriple:
    x: float
    y: float
    z: float


def to_reduced(spec: MoleculeSpec, field_kv_per_cm: float, temperature_k: float) -> ReducedTriple:
    """Reduced (x, y, z) for a molecule at given field and temperature."""
    if field_kv_per_cm < 0 or temperature_k < 0:
        raise InvalidSpec("field and temperature must be non-negative")
    b = spec.rotational_constant
    r = spec.site_spacing
    return ReducedTriple(
        x=X_FACTOR * spec.dipole * field_kv_per_cm / b,
        y=Y_FACTOR * spec.dipole**2 / r**3 / b,
        z=Z_FACTOR * temperature_k / b,
    )


def registry() -> list[RegistryEntry]:
    """Built-in candidate molecules.

    Only SrO has published constants; KCs and CsI carry just their cited
    reduced couplings and need constants from a user config file.
    """
    return [
        RegistryEntry(
            name="SrO",
            spec=MoleculeSpec(
                name="SrO", dipole=8.9, rotational_constant=0.33, lattice_wavelength=1.0
            ),
        ),
        RegistryEntry(name="KCs", spec=None, cited_y=4e-6),
        RegistryEntry(name="CsI", spec=None, cited_y=2e-4),
    ]


def load_config(path: str | Path) -> list[MoleculeSpec]:
    """Load molecule constants from a JSON array of
    {name, dipole_debye, b_cm1, lattice_wavelength_um}."""
    records = json.loads(Path(path).read_text())
    return [
        MoleculeSpec(
            name=rec["name"],
            dipole=rec["dipole_debye"],
            rotational_constant=rec["b_cm1"],
            lattice_wavelength=rec["lattice_wavelength_um"],
        )
        for rec in records
    ]


def lookup(name: str, config: list[MoleculeSpec] | None = None) -> RegistryEntry:
    """Resolve a molecule by name, preferring user-config constants."""
    if config:
        for spec in config:
            if spec.name == name:
                return RegistryEntry(name=name, spec=spec)
    for entry in registry():
        if entry.name == name:
            return entry
    raise MoleculeNotFound(f"unknown molecule {name!r}")
