// Copyright 2026 The rankguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rankguard command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rankguard/acceptance.hpp"
#include "rankguard/decoder.hpp"
#include "rankguard/error.hpp"
#include "rankguard/rank_metrics.hpp"
#include "rankguard/security.hpp"
#include "rankguard/serialize.hpp"

using namespace rankguard;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitEnumeration = 3;

struct SchemeSource {
  std::string scheme_path;
  std::string config_path;
  std::uint32_t q = 2;
  std::uint32_t m = 4;
  std::size_t l = 1;
  std::size_t n = 3;
  std::size_t k = 2;
  std::uint64_t seed = 0;

  void attach(CLI::App* app) {
    app->add_option("--scheme", scheme_path, "Scheme JSON written by build-scheme");
    app->add_option("--config", config_path, "Experiment config JSON (version 1)");
    app->add_option("--q", q, "Base field size (prime)");
    app->add_option("--m", m, "Extension degree");
    app->add_option("--l", l, "Message length");
    app->add_option("--n", n, "Code length");
    app->add_option("--k", k, "Dimension of C1");
    app->add_option("--seed", seed, "Seed");
  }
};

Json read_json(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, what + " '" + path + "' cannot be opened");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidConfig, what + " '" + path + "' is not valid JSON: " + e.what());
  }
}

ExperimentConfig load_config(const SchemeSource& src) {
  if (!src.config_path.empty()) return config_from_json(read_json(src.config_path, "config"));
  ExperimentConfig c;
  c.q = src.q;
  c.m = src.m;
  c.l = src.l;
  c.n = src.n;
  c.k = src.k;
  c.seed = src.seed;
  return config_from_json(config_to_json(c));
}

NestedScheme load_scheme(const SchemeSource& src) {
  if (!src.scheme_path.empty()) return scheme_from_json(read_json(src.scheme_path, "scheme"));
  return config_scheme(load_config(src));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidConfig, "output '" + path + "' cannot be written");
  out << text;
}

std::string table_csv(const std::vector<std::size_t>& values, const char* kind, std::size_t first) {
  std::ostringstream os;
  os << "kind,i,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << kind << ',' << first + i << ',' << values[i] << '\n';
  return os.str();
}

JointDistribution make_distribution(const NestedScheme& s, const std::string& kind, std::uint64_t seed) {
  if (kind == "uniform") return JointDistribution::uniform(s);
  Rng rng(seed);
  return JointDistribution::random_coset_weights(s, rng, 5);
}

Json vector_json(const FieldCtx& f, const ExtVector& v) {
  Json out = Json::array();
  for (auto e : v) out.push_back(element_to_json(f, e));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankguard: rank-metric codes and secure network coding"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--out", out_path, "Write output to a file instead of stdout");

  SchemeSource build_src;
  auto* build = app.add_subcommand("build-scheme", "Build the systematic MRD nested coset scheme");
  build_src.attach(build);

  SchemeSource rgrw_src;
  auto* rgrw_cmd = app.add_subcommand("rgrw", "Relative generalized rank weights of (C1, C2) as CSV");
  rgrw_src.attach(rgrw_cmd);
  bool rgrw_dual = false;
  rgrw_cmd->add_flag("--dual", rgrw_dual, "Use the pair (C2^perp, C1^perp)");

  SchemeSource rdip_src;
  auto* rdip_cmd = app.add_subcommand("rdip", "Relative dimension/intersection profile of (C1, C2) as CSV");
  rdip_src.attach(rdip_cmd);
  bool rdip_dual = false;
  rdip_cmd->add_flag("--dual", rdip_dual, "Use the pair (C2^perp, C1^perp)");

  SchemeSource eq_src;
  auto* eq_cmd = app.add_subcommand("equivocation", "Exact worst-case leakage and equivocation");
  eq_src.attach(eq_cmd);
  std::size_t eq_mu = 0;
  std::string eq_dist = "uniform";
  eq_cmd->add_option("--mu", eq_mu, "Wiretapped links")->required();
  eq_cmd->add_option("--distribution", eq_dist, "uniform or random")->check(CLI::IsMember({"uniform", "random"}));

  SchemeSource strength_src;
  auto* strength_cmd = app.add_subcommand("strength", "Exact maximum strength and its bounds");
  strength_src.attach(strength_cmd);

  SchemeSource sim_src;
  auto* sim_cmd = app.add_subcommand("simulate", "Seeded encode, transmit, decode trials as CSV");
  sim_src.attach(sim_cmd);
  std::size_t sim_t = 0, sim_rho = 0, sim_n_out = 0;
  std::uint64_t sim_trials = 100;
  sim_cmd->add_option("--t", sim_t, "Rank of injected errors");
  sim_cmd->add_option("--rho", sim_rho, "Rank deficiency of the transfer matrix");
  sim_cmd->add_option("--N", sim_n_out, "Output links (default n)");
  sim_cmd->add_option("--trials", sim_trials, "Trial count");

  SchemeSource cap_src;
  auto* cap_cmd = app.add_subcommand("verify-capability", "Check decoding success for all or sampled channels");
  cap_src.attach(cap_cmd);
  std::size_t cap_t = 0, cap_rho = 0, cap_n_out = 0;
  std::string cap_mode = "sampled";
  std::uint64_t cap_budget = 0;
  cap_cmd->add_option("--t", cap_t, "Rank of injected errors");
  cap_cmd->add_option("--rho", cap_rho, "Rank deficiency of the transfer matrix");
  cap_cmd->add_option("--N", cap_n_out, "Output links (default n)");
  cap_cmd->add_option("--mode", cap_mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  cap_cmd->add_option("--budget", cap_budget, "Decode budget (default 1e5 sampled, 1e10 exhaustive)");

  auto* acc_cmd = app.add_subcommand("acceptance", "Run an acceptance suite");
  std::string suite = "all";
  acc_cmd->add_option("suite", suite, "Suite name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      emit(out_path, scheme_to_json(load_scheme(build_src)).dump(2) + "\n");
    } else if (*rgrw_cmd) {
      const NestedScheme s = load_scheme(rgrw_src);
      const WeightTable w = rgrw_dual ? rgrw(dual(s.c2), dual(s.c1)) : rgrw(s.c1, s.c2);
      emit(out_path, table_csv(w.values, "rgrw", 1));
    } else if (*rdip_cmd) {
      const NestedScheme s = load_scheme(rdip_src);
      const ProfileTable p = rdip_dual ? rdip(dual(s.c2), dual(s.c1)) : rdip(s.c1, s.c2);
      emit(out_path, table_csv(p.values, "rdip", 0));
    } else if (*eq_cmd) {
      const NestedScheme s = load_scheme(eq_src);
      const JointDistribution dist = make_distribution(s, eq_dist, eq_src.seed);
      const EquivocationReport r = universal_equivocation(dist, eq_mu);
      Json j{{"mu", eq_mu},
             {"distribution", eq_dist},
             {"max_leakage", r.leakage.max_leakage.to_string()},
             {"max_leakage_value", r.leakage.max_leakage.to_double()},
             {"predicted", r.leakage.predicted},
             {"equivocation", r.theta.to_string()},
             {"equivocation_value", r.theta.to_double()},
             {"divergence_s", r.leakage.d_s.to_double()},
             {"divergence_x", r.leakage.d_x.to_double()},
             {"wiretap_candidates", r.leakage.candidates},
             {"argmax_b", matrix_to_json(r.leakage.argmax_b)}};
      emit(out_path, j.dump(2) + "\n");
    } else if (*strength_cmd) {
      const NestedScheme s = load_scheme(strength_src);
      const OmegaBounds b = omega_bounds(s);
      Json j{{"omega", omega_exact(s)}, {"lower_bound", b.lower}, {"upper_bound", b.upper}};
      emit(out_path, j.dump(2) + "\n");
    } else if (*sim_cmd) {
      const NestedScheme s = load_scheme(sim_src);
      const FieldCtx& f = *s.ctx();
      const std::size_t n_out = sim_n_out == 0 ? s.n() : sim_n_out;
      Rng rng(sim_src.seed);
      const std::uint64_t messages = message_count(s);
      std::ostringstream os;
      os << "trial,message,decoded,status,discrepancy,rank_a,rank_e,success\n";
      std::uint64_t ok = 0;
      for (std::uint64_t i = 0; i < sim_trials; ++i) {
        const BitMatrix a = sample_transfer(rng, f.q(), n_out, s.n(), sim_rho);
        const std::uint64_t si = rng.below(messages);
        const ExtVector x = encode(s, message_from_index(s, si), rng);
        BitMatrix d;
        ExtVector z;
        sample_error(rng, f, n_out, sim_t, d, z);
        const ExtVector e = error_vector(f, d, z);
        const DecodeResult r = decode_coherent(s, a, vec_add(f, apply_transpose(f, x, a), e));
        const bool success = r.status == DecodeStatus::Decoded && r.message_index == si;
        ok += success ? 1 : 0;
        os << i << ',' << si << ',' << r.message_index << ',' << to_string(r.status) << ',' << r.discrepancy << ','
           << rank(a) << ',' << rank_weight(f, e) << ',' << (success ? 1 : 0) << '\n';
      }
      emit(out_path, os.str());
      std::cerr << ok << "/" << sim_trials << " trials decoded correctly\n";
    } else if (*cap_cmd) {
      const NestedScheme s = load_scheme(cap_src);
      const auto mode = cap_mode == "exhaustive" ? CapabilityMode::Exhaustive : CapabilityMode::Sampled;
      if (cap_budget == 0) cap_budget = mode == CapabilityMode::Exhaustive ? 10000000000ULL : 100000ULL;
      const CapabilityReport r = capability_report(s, cap_t, cap_rho, mode, cap_budget, cap_src.seed, cap_n_out);
      Json j{{"verified", r.verified}, {"trials", r.trials}, {"budget_exhausted", r.budget_exhausted}};
      if (r.counterexample) {
        const FieldCtx& f = *s.ctx();
        const Counterexample& c = *r.counterexample;
        j["counterexample"] = Json{{"a", matrix_to_json(c.a)},
                                   {"message", vector_json(f, c.message)},
                                   {"x", vector_json(f, c.x)},
                                   {"error", vector_json(f, c.error)},
                                   {"status", to_string(c.result.status)},
                                   {"decoded", vector_json(f, c.result.message)}};
      }
      emit(out_path, j.dump(2) + "\n");
    } else if (*acc_cmd) {
      const auto results = run_acceptance(suite, &std::cout);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      std::cout << passed << "/" << results.size() << " passed\n";
      return passed == results.size() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::EnumerationTooLarge ? kExitEnumeration : kExitPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "error (InvalidConfig): " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
