#!/usr/bin/env python3
# Copyright 2026 The qcc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""One-off generator for the checked-in molecular fixtures.

Runs RHF with PySCF, writes the canonical-MO integrals as FCIDUMP and, for
the active-space examples, the spin-summed CISD 1-RDM in the same MO basis.
A manifest records the PySCF HF/FCI reference energies.

The C++ code never evaluates molecular integrals; it only reads these files.
Re-running this script is not part of the build.

    python3 tools/fixtures/generate_fixtures.py data/fixtures
"""

import json
import os
import sys

import numpy as np
from pyscf import ci, fci, gto, scf
from pyscf.tools import fcidump

H2_STO3G_BONDS = [0.5, 0.6, 0.7414, 0.75, 0.9, 1.2, 1.6, 2.2]


def build(atoms, basis):
    mol = gto.M(atom=atoms, basis=basis, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    return mol, mf


def write_rdm(path, rdm):
    n = rdm.shape[0]
    with open(path, "w") as f:
        f.write(f"# spin-summed 1-RDM, canonical MO basis, {n} x {n}\n")
        for row in rdm:
            f.write(" ".join(f"{x: .16e}" for x in row) + "\n")


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    manifest = []

    def emit(name, atoms, basis, bond, rdm=False):
        mol, mf = build(atoms, basis)
        e_fci = fci.FCI(mf).kernel()[0] if mol.nao <= 12 else None
        fcidump.from_scf(mf, os.path.join(out_dir, name + ".fcidump"), tol=1e-14)
        entry = {
            "name": name,
            "basis": basis,
            "bond_length_angstrom": bond,
            "norb": int(mol.nao),
            "nelec": int(mol.nelectron),
            "e_hf": float(mf.e_tot),
            "e_fci": None if e_fci is None else float(e_fci),
        }
        if rdm:
            cisd = ci.CISD(mf)
            cisd.conv_tol = 1e-12
            cisd.kernel()
            write_rdm(os.path.join(out_dir, name + ".rdm1"), cisd.make_rdm1())
            entry["e_cisd"] = float(cisd.e_tot)
        manifest.append(entry)

    for r in H2_STO3G_BONDS:
        emit(f"h2_sto3g_{r}", f"H 0 0 0; H 0 0 {r}", "sto-3g", r)
    emit("h2_631g_0.7414", "H 0 0 0; H 0 0 0.7414", "6-31g", 0.7414)
    emit("h2_ccpvdz_0.75", "H 0 0 0; H 0 0 0.75", "cc-pvdz", 0.75, rdm=True)
    emit("lih_sto3g_1.45", "Li 0 0 0; H 0 0 1.45", "sto-3g", 1.45, rdm=True)

    with open(os.path.join(out_dir, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures")
