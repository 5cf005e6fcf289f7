// Copyright 2026 The qcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcc/reduction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fermion_oracles.hpp"
#include "molecules.hpp"
#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"

namespace qcc {
namespace {

double round5(double v) { return std::round(v * 1e5) / 1e5; }

TEST(NaturalOrbitals, LithiumHydride) {
  const NaturalOrbitals no = diagonalize_1rdm(load_fixture_rdm("lih_sto3g_1.45"));
  const std::vector<double> want{1.99992, 1.96206, 0.03454, 0.00171, 0.00171, 0.00005};
  ASSERT_EQ(no.noons.size(), 6);
  for (int k = 0; k < 6; ++k) EXPECT_DOUBLE_EQ(round5(no.noons[k]), want[k]) << k;
}

TEST(NaturalOrbitals, HydrogenCcPvdz) {
  const RMatrix rdm = load_fixture_rdm("h2_ccpvdz_0.75");
  const NaturalOrbitals no = diagonalize_1rdm(rdm);
  ASSERT_EQ(no.noons.size(), 10);
  const std::vector<double> want{1.96588, 0.02104, 0.00611, 0.00314, 0.00314,
                                 0.00020, 0.00016};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_DOUBLE_EQ(round5(no.noons[k]), want[k]);
  EXPECT_DOUBLE_EQ(round5(no.noons[9]), 0.00001);
  const RMatrix& r = no.rotation;
  EXPECT_LT((r.transpose() * r - RMatrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((r * no.noons.asDiagonal() * r.transpose() - rdm).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(NaturalOrbitals, DiagonalInput) {
  RVector d(3);
  d << 0.2, 1.9, 0.7;
  const NaturalOrbitals no = diagonalize_1rdm(d.asDiagonal());
  EXPECT_NEAR(no.noons[0], 1.9, 1e-14);
  EXPECT_NEAR(no.noons[1], 0.7, 1e-14);
  EXPECT_NEAR(no.noons[2], 0.2, 1e-14);
  EXPECT_NEAR(std::abs(no.rotation(1, 0)), 1.0, 1e-14);
  RMatrix asym = RMatrix::Identity(2, 2);
  asym(0, 1) = 0.1;
  try {
    diagonalize_1rdm(asym);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSymmetric);
  }
}

TEST(ActiveSpaceSelection, Examples) {
  const NaturalOrbitals lih = diagonalize_1rdm(load_fixture_rdm("lih_sto3g_1.45"));
  const ActiveSpace s = select_active_space(lih.noons);
  EXPECT_EQ(s.frozen_occupied, std::vector<int>{0});
  EXPECT_EQ(s.removed_virtual, std::vector<int>{5});
  EXPECT_EQ(s.retained.size(), 4u);

  const ActiveSpace flat = select_active_space(RVector::Constant(4, 1.0));
  EXPECT_TRUE(flat.frozen_occupied.empty());
  EXPECT_TRUE(flat.removed_virtual.empty());

  const NaturalOrbitals h2 = diagonalize_1rdm(load_fixture_rdm("h2_ccpvdz_0.75"));
  const ActiveSpace c = select_active_space(h2.noons, 1e-4);
  EXPECT_EQ(c.retained.size(), 9u);
  EXPECT_EQ(c.removed_virtual, std::vector<int>{9});

  try {
    select_active_space(RVector::Constant(2, 2.0), 1e-4, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyActiveSpace);
  }
}

TEST(FreezeReduce, EmptyFreezeIsIdentity) {
  const auto ints = testmol::load("lih_sto3g_1.45");
  ActiveSpace all;
  for (int k = 0; k < 6; ++k) all.retained.push_back(k);
  const MolecularIntegrals r = freeze_reduce(ints, all);
  EXPECT_EQ(r.n_spin_orbitals, ints.n_spin_orbitals);
  EXPECT_EQ(r.core_energy, ints.core_energy);
  EXPECT_EQ((r.h_one - ints.h_one).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(r.h_two, ints.h_two);
  EXPECT_EQ(all.core_shift, 0.0);
}

TEST(FreezeReduce, DecoupledVirtualLeavesSpectrum) {
  std::mt19937_64 rng(4);
  RMatrix h1;
  std::vector<double> eri;
  oracle::random_spatial_integrals(3, rng, h1, eri);
  // Decouple orbital 2.
  for (int i = 0; i < 3; ++i) h1(i, 2) = h1(2, i) = 0.0;
  h1(2, 2) = 5.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (a == 2 || b == 2 || c == 2 || d == 2) eri[((a * 3 + b) * 3 + c) * 3 + d] = 0.0;
  const MolecularIntegrals ints = from_spatial(h1, eri, 0.1, 2, 0);
  ActiveSpace s{{}, {2}, {0, 1}};
  const MolecularIntegrals r = freeze_reduce(ints, s);
  const auto full = testmol::qubit_hamiltonian(ints, Encoding::kJordanWigner);
  const auto red = testmol::qubit_hamiltonian(r, Encoding::kJordanWigner);
  // Two-electron, S_z = 0 sectors.
  const auto e_full = sector_eigensolve(full, occupation_sector(6, 0b000111, 1, 0b111000, 1), 1);
  const auto e_red = sector_eigensolve(red, occupation_sector(4, 0b0011, 1, 0b1100, 1), 1);
  EXPECT_NEAR(e_full.values[0], e_red.values[0], 1e-10);
}

TEST(FreezeReduce, FrozenCoreMatchesDeterminantEnergies) {
  // Freezing one orbital: every determinant containing the frozen pair has
  // the same energy before and after reduction.
  std::mt19937_64 rng(6);
  RMatrix h1;
  std::vector<double> eri;
  oracle::random_spatial_integrals(3, rng, h1, eri);
  const MolecularIntegrals ints = from_spatial(h1, eri, 0.3, 4, 0);
  ActiveSpace s{{1}, {}, {0, 2}};
  const MolecularIntegrals r = freeze_reduce(ints, s);
  EXPECT_EQ(r.n_electrons, 2);
  EXPECT_EQ(r.n_up, 1);
  const int n = 3;
  for (int a : {0, 1}) {
    for (int b : {0, 1}) {
      const std::vector<int> act{a, 2 + b};
      const std::vector<int> full_occ{1, n + 1, s.retained[a], n + s.retained[b]};
      EXPECT_NEAR(determinant_energy(r, act), determinant_energy(ints, full_occ), 1e-12);
    }
  }
  EXPECT_NEAR(s.core_shift, determinant_energy(ints, {1, n + 1}) - 0.3, 1e-12);
}

TEST(FreezeReduce, Inconsistent) {
  const auto ints = testmol::load("h2_sto3g_0.7414");
  ActiveSpace dup{{0}, {}, {0, 1}};
  ActiveSpace missing{{}, {}, {0}};
  ActiveSpace too_many{{0, 1}, {}, {}};
  for (auto* s : {&dup, &missing, &too_many}) {
    try {
      freeze_reduce(ints, *s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInconsistentSpace);
    }
  }
}

TEST(RotateOrbitals, PreservesSpectrum) {
  const SpatialIntegrals s = load_fixture("h2_631g_0.7414");
  std::mt19937_64 rng(8);
  RMatrix a = RMatrix::Random(4, 4);
  Eigen::HouseholderQR<RMatrix> qr(a);
  const RMatrix q = qr.householderQ();
  const SpatialIntegrals r = rotate_orbitals(s, q);
  const auto h0 = testmol::qubit_hamiltonian(to_spin_orbitals(s), Encoding::kJordanWigner);
  const auto h1 = testmol::qubit_hamiltonian(to_spin_orbitals(r), Encoding::kJordanWigner);
  const auto sector = occupation_sector(8, 0x0f, 1, 0xf0, 1);
  const auto e0 = sector_eigensolve(h0, sector, 4);
  const auto e1 = sector_eigensolve(h1, sector, 4);
  EXPECT_LT((e0.values - e1.values).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(e0.values[0], *fixture_info("h2_631g_0.7414").e_fci, 1e-9);
}

TEST(Taper, HydrogenParity) {
  const auto ints = testmol::load("h2_sto3g_0.7414");
  const PauliSum h = testmol::qubit_hamiltonian(ints, Encoding::kParity);
  const SymmetrySector sec = sector_for(2, 1);
  EXPECT_EQ(sec.z_total, 1);
  EXPECT_EQ(sec.z_up, -1);
  const PauliSum t = taper_two_qubits(h, {Encoding::kParity, 4}, sec);
  EXPECT_EQ(t.n_qubits(), 2);
  const auto full = sector_eigensolve(
      testmol::qubit_hamiltonian(ints, Encoding::kJordanWigner),
      occupation_sector(4, 0b0011, 1, 0b1100, 1), 4);
  const auto tap = exact_eigensolve(t, 4);
  EXPECT_LT((full.values - tap.values).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Taper, SpectrumOfFixedBitProjection) {
  // For random symmetric Hamiltonians, the tapered spectrum equals the full
  // spectrum on states with the two stored parities fixed.
  std::mt19937_64 rng(12);
  for (Encoding e : {Encoding::kParity, Encoding::kBravyiKitaev, Encoding::kBravyiKitaevTree}) {
    for (int n_spatial : {2, 3, 4}) {
      const int m = 2 * n_spatial;
      if (e == Encoding::kBravyiKitaev && (m & (m - 1))) continue;
      RMatrix h1;
      std::vector<double> eri;
      oracle::random_spatial_integrals(n_spatial, rng, h1, eri);
      const MolecularIntegrals ints = from_spatial(h1, eri, 0.0, 2, 0);
      const PauliSum h = testmol::qubit_hamiltonian(ints, e);
      for (int zt : {1, -1}) {
        for (int zu : {1, -1}) {
          const PauliSum t = taper_two_qubits(h, {e, m}, {zt, zu});
          const auto [qa, qb] = tapered_qubits(m);
          std::vector<std::uint64_t> basis;
          for (std::uint64_t b = 0; b < (1u << m); ++b) {
            if ((((b >> qa) & 1) ? -1 : 1) == zu && (((b >> qb) & 1) ? -1 : 1) == zt) {
              basis.push_back(b);
            }
          }
          const int dim = 1 << (m - 2);
          const auto want = sector_eigensolve(h, basis, dim);
          const auto got = exact_eigensolve(t, dim, false, m - 2);
          EXPECT_LT((want.values - got.values).cwiseAbs().maxCoeff(), 1e-10)
              << to_string(e) << " m=" << m;
        }
      }
    }
  }
}

TEST(Taper, IdentityOnly) {
  const PauliSum t = taper_two_qubits(PauliSum::identity(0.3), {Encoding::kParity, 4}, {1, -1});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.constant(), cplx(0.3));
}

TEST(Taper, BravyiKitaevEightModes) {
  EXPECT_EQ(tapered_qubits(8), std::make_pair(3, 7));
  PauliSum h;
  h.add(PauliString::parse("Z3 Z7 X1"), 1.0);
  const PauliSum t = taper_two_qubits(h, {Encoding::kBravyiKitaev, 8}, {-1, 1});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.terms().begin()->first, PauliString::parse("X1"));
  EXPECT_EQ(t.terms().begin()->second, cplx(-1.0));
}

TEST(Taper, Errors) {
  PauliSum bad;
  bad.add(PauliString::parse("X3"), 1.0);
  try {
    taper_two_qubits(bad, {Encoding::kParity, 4}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSymmetric);
  }
  EXPECT_THROW(taper_two_qubits(PauliSum::identity(), {Encoding::kBravyiKitaev, 6}, {1, 1}), Error);
  EXPECT_THROW(taper_two_qubits(PauliSum::identity(), {Encoding::kJordanWigner, 4}, {1, 1}), Error);
}

TEST(Taper, SectorHoldsGroundStateForFixtures) {
  for (const char* name : {"h2_sto3g_0.7414", "h2_sto3g_2.2", "h2_631g_0.7414"}) {
    const auto ints = testmol::load(name);
    const int m = ints.n_spin_orbitals;
    const PauliSum h = testmol::qubit_hamiltonian(ints, Encoding::kParity);
    const PauliSum t = taper_two_qubits(h, {Encoding::kParity, m},
                                        sector_for(ints.n_electrons, ints.n_up));
    EXPECT_NEAR(exact_eigensolve(t, 1).values[0], *fixture_info(name).e_fci, 1e-9) << name;
  }
}

TEST(Reduction, LithiumHydrideActiveSpace) {
  const SpatialIntegrals s = load_fixture("lih_sto3g_1.45");
  const NaturalOrbitals no = diagonalize_1rdm(load_fixture_rdm("lih_sto3g_1.45"));
  ActiveSpace space = select_active_space(no.noons);
  const MolecularIntegrals red =
      freeze_reduce(to_spin_orbitals(rotate_orbitals(s, no.rotation)), space);
  EXPECT_EQ(red.n_spin_orbitals, 8);
  EXPECT_EQ(red.n_electrons, 2);
  const PauliSum h = testmol::qubit_hamiltonian(red, Encoding::kBravyiKitaevTree);
  const PauliSum t = taper_two_qubits(h, {Encoding::kBravyiKitaevTree, 8}, sector_for(2, 1));
  EXPECT_EQ(t.n_qubits(), 6);
  const double e_red = exact_eigensolve(t, 1).values[0];
  const double e_fci = *fixture_info("lih_sto3g_1.45").e_fci;
  EXPECT_GT(e_red, e_fci);
  EXPECT_LT(e_red - e_fci, 0.5e-3);
}

}  // namespace
}  // namespace qcc
