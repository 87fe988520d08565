// Copyright 2026 The Gerry Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gerry/generators.h"
#include "gerry/instance_io.h"
#include "gerry/model.h"
#include "gerry/oracle.h"
#include "gerry/path_solver.h"
#include "gerry/reductions.h"
#include "gerry/set_cover.h"
#include "gerry/tree_solver.h"

namespace gerry {
namespace {

// Reported on stderr with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadInstance(const std::string& path) {
  try {
    return ParseInstance(ReadFile(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const std::map<std::string, Semantics> kModes = {
    {"strict", Semantics::kStrict}, {"tiebreak", Semantics::kTiebreak}};

struct SolveOptions {
  std::string file;
  std::string algo = "auto";
  std::string mode;
  bool witness = false;
  int jobs = 1;
  uint64_t max_partitions = OracleOptions{}.max_partitions;
};

void AddSolveFlags(CLI::App* cmd, SolveOptions& opts, bool with_algo) {
  cmd->add_option("file", opts.file, "Instance file ('-' for stdin)")
      ->required();
  if (with_algo) {
    cmd->add_option("--algo", opts.algo, "auto, oracle, path or branch")
        ->check(CLI::IsMember({"auto", "oracle", "path", "branch"}));
  }
  cmd->add_option("--mode", opts.mode, "Override the file's semantics mode")
      ->check(CLI::IsMember({"strict", "tiebreak"}));
  cmd->add_flag("--witness", opts.witness, "Print a partition on YES");
  cmd->add_option("--jobs", opts.jobs, "Worker threads for the oracle")
      ->check(CLI::Range(1, 1024));
  cmd->add_option("--max-partitions", opts.max_partitions,
                  "Oracle refuses instances with more partitions");
}

int CmdSolve(const SolveOptions& opts, std::ostream& out) {
  Instance inst = LoadInstance(opts.file);
  if (!opts.mode.empty()) inst = inst.WithMode(kModes.at(opts.mode));
  std::string algo = opts.algo;
  if (algo == "auto") algo = IsPathForest(inst) ? "path" : "branch";

  SolveResult result;
  try {
    if (algo == "oracle") {
      result = SolveOracle(inst, {opts.max_partitions, opts.jobs});
    } else if (algo == "path") {
      result = SolvePathForest(inst);
    } else {
      result = SolveTree(inst);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const ResourceLimitError& e) {
    throw UsageError(e.what());
  }
  out << (result.yes ? "YES" : "NO") << "\n";
  if (result.yes && opts.witness) out << SerializePartition(*result.witness);
  return kExitDecided;
}

int CmdVerify(const std::string& instance_file,
              const std::string& partition_file, std::ostream& out) {
  const Instance inst = LoadInstance(instance_file);
  DistrictPartition part;
  try {
    part = ParsePartition(ReadFile(partition_file));
  } catch (const ParseError& e) {
    throw UsageError(partition_file + ": " + e.what());
  }
  const auto violations = VerifyPartition(inst, part);
  if (!violations.empty()) {
    out << "INVALID " << violations.front().ToString() << "\n";
  } else if (Evaluate(inst, part)) {
    out << "VALID SATISFYING\n";
  } else {
    out << "VALID NOT-SATISFYING\n";
  }
  return kExitDecided;
}

int CmdReduce(const std::string& variant, const std::string& file, bool roles,
              int min_frequency, std::ostream& out) {
  SetCoverInstance sc;
  try {
    sc = ParseSetCover(ReadFile(file));
  } catch (const ParseError& e) {
    throw UsageError(file + ": " + e.what());
  } catch (const ValidationError& e) {
    throw UsageError(file + ": " + e.what());
  }
  const ReductionArtifact art =
      variant == "depth2" ? ReduceDepth2(sc, min_frequency) : ReduceSubstar(sc);
  out << SerializeInstance(art.instance);
  if (roles) {
    for (size_t v = 0; v < art.vertex_roles.size(); ++v) {
      out << "# role " << v + 1 << " " << art.vertex_roles[v] << "\n";
    }
    for (size_t c = 0; c < art.candidate_roles.size(); ++c) {
      out << "# candidate " << c + 1 << " " << art.candidate_roles[c] << "\n";
    }
  }
  return kExitDecided;
}

int CmdStats(const std::string& file, std::ostream& out) {
  const Instance inst = LoadInstance(file);
  const int leaves = LeafCount(inst);
  const int branch_degree = SummedBranchDegree(inst);
  out << "n " << inst.num_vertices() << "\n";
  out << "edges " << inst.num_edges() << "\n";
  out << "components " << inst.num_components() << "\n";
  out << "leaves " << leaves << "\n";
  out << "summed_branch_degree " << branch_degree << "\n";
  out << "degree_bound " << (branch_degree <= 3 * leaves ? "true" : "false")
      << "\n";
  return kExitDecided;
}

struct GenOptions {
  std::string shape = "tree";
  std::string weights = "unit";
  std::string mode = "strict";
  RandomSpec spec;
};

int CmdGen(GenOptions opts, std::ostream& out) {
  try {
    opts.spec.shape = ParseShape(opts.shape);
    opts.spec.weights =
        opts.weights == "unit" ? WeightModel::kUnit : WeightModel::kVector;
    opts.spec.mode = kModes.at(opts.mode);
    out << SerializeInstance(GenerateInstance(opts.spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitDecided;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact solvers and reductions for Gerrymandering on forests",
               "gerry"};
  app.require_subcommand(1, 1);

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Decide an instance");
  AddSolveFlags(solve, solve_opts, /*with_algo=*/true);

  SolveOptions oracle_opts;
  oracle_opts.algo = "oracle";
  CLI::App* oracle =
      app.add_subcommand("oracle", "Decide by exhaustive enumeration");
  AddSolveFlags(oracle, oracle_opts, /*with_algo=*/false);

  std::string instance_file, partition_file;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a partition against an instance");
  verify->add_option("instance", instance_file)->required();
  verify->add_option("partition", partition_file)->required();

  std::string variant, sc_file;
  bool roles = false;
  int min_frequency = 3;
  CLI::App* reduce =
      app.add_subcommand("reduce", "Build a Gerrymandering instance from Set Cover");
  reduce->add_option("variant", variant)
      ->required()
      ->check(CLI::IsMember({"depth2", "substar"}));
  reduce->add_option("scfile", sc_file)->required();
  reduce->add_flag("--roles", roles, "Append vertex and candidate roles");
  reduce->add_option("--dmin", min_frequency,
                     "Minimum padded element frequency (depth2)")
      ->check(CLI::Range(1, 1 << 20));

  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--shape", gen_opts.shape)
      ->check(CLI::IsMember(
          {"path", "path-forest", "tree", "subdivided-star", "forest"}));
  gen->add_option("--n", gen_opts.spec.num_vertices)->required();
  gen->add_option("--candidates", gen_opts.spec.num_candidates);
  gen->add_option("--k", gen_opts.spec.num_districts)->required();
  gen->add_option("--leaves", gen_opts.spec.leaves);
  gen->add_option("--components", gen_opts.spec.components);
  gen->add_option("--weights", gen_opts.weights)
      ->check(CLI::IsMember({"unit", "vector"}));
  gen->add_option("--max-weight", gen_opts.spec.max_weight);
  gen->add_option("--mode", gen_opts.mode)
      ->check(CLI::IsMember({"strict", "tiebreak"}));
  gen->add_option("--seed", gen_opts.spec.seed);

  std::string stats_file;
  CLI::App* stats = app.add_subcommand("stats", "Print structural statistics");
  stats->add_option("file", stats_file)->required();

  std::vector<std::string> argv_storage = {"gerry"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitDecided;
  } catch (const CLI::ParseError& e) {
    err << "gerry: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve) return CmdSolve(solve_opts, out);
    if (*oracle) return CmdSolve(oracle_opts, out);
    if (*verify) return CmdVerify(instance_file, partition_file, out);
    if (*reduce) return CmdReduce(variant, sc_file, roles, min_frequency, out);
    if (*gen) return CmdGen(gen_opts, out);
    if (*stats) return CmdStats(stats_file, out);
  } catch (const UsageError& e) {
    err << "gerry: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gerry
