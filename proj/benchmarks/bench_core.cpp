// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Microbenchmarks for the exact-arithmetic hot paths: exterior-algebra
// primitives, the G2 projector/rank machinery, and the full per-structure
// pipelines (characteristic connection and identity battery).

#include <benchmark/benchmark.h>

#include "g2forge/catalog.hpp"
#include "g2forge/g2core.hpp"
#include "g2forge/torsion_connection.hpp"

using namespace g2forge;

namespace {

const G2FormData& standard_form() {
  static const G2FormData data = G2FormData::standard();
  return data;
}

G2Structure make_structure(const char* name) {
  const StructureSpec spec = catalog_structure(name);
  return G2Structure(spec.algebra, spec.phi);
}

void bm_wedge_phi_phi(benchmark::State& state) {
  const AltForm& phi = standard_form().phi();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(phi, phi));
  }
}
BENCHMARK(bm_wedge_phi_phi);

void bm_hodge_three_form(benchmark::State& state) {
  const AltForm& phi = standard_form().phi();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hodge(phi));
  }
}
BENCHMARK(bm_hodge_three_form);

void bm_full_contract_psi_psi(benchmark::State& state) {
  const AltForm& psi = standard_form().psi();
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_contract(psi, psi));
  }
}
BENCHMARK(bm_full_contract_psi_psi);

void bm_project3_basis(benchmark::State& state) {
  const G2FormData& data = standard_form();
  const AltForm x = AltForm::monomial(3, MultiIndex{1, 2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(project3(data, x));
  }
}
BENCHMARK(bm_project3_basis);

void bm_contraction_identity_suite(benchmark::State& state) {
  const G2FormData& data = standard_form();
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_suite(data));
  }
}
BENCHMARK(bm_contraction_identity_suite);

void bm_four_form_injectivity(benchmark::State& state) {
  const G2FormData& data = standard_form();
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_form_injectivity(data));
  }
}
BENCHMARK(bm_four_form_injectivity);

void bm_characteristic_connection(benchmark::State& state) {
  const G2Structure s = make_structure("su2su2u1_phi0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(characteristic_connection(s));
  }
}
BENCHMARK(bm_characteristic_connection);

void bm_identity_battery(benchmark::State& state) {
  const G2Structure s = make_structure("r3su2u1_standard_phi");
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_battery(s));
  }
}
BENCHMARK(bm_identity_battery);

}  // namespace

BENCHMARK_MAIN();
