// Copyright 2026 The Amalgam Authors
//
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

#include "amalgam/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "amalgam/certify.hpp"
#include "amalgam/coloring.hpp"
#include "amalgam/constructions.hpp"
#include "amalgam/detachment.hpp"
#include "amalgam/io.hpp"

namespace amalgam::cli {
namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractViolation(path + ": " + e.what());
  }
}

json feasibility_json(const FeasibilityReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"condition", v.condition}, {"detail", v.detail}});
  }
  return {{"feasible", report.feasible}, {"violations", std::move(violations)}};
}

struct Common {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;
};

class Writer {
 public:
  Writer(const Common& common, std::ostream& out) : common_(common), out_(out) {}

  void emit(const std::string& text) const {
    if (common_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(common_.out_path);
    if (!file) throw UsageError("cannot write " + common_.out_path);
    file << text;
  }
  void emit(const json& doc) const { emit(doc.dump(2) + "\n"); }

 private:
  const Common& common_;
  std::ostream& out_;
};

// Inclusive range "a..b" or a single integer.
std::vector<int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  int lo;
  int hi;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "'");
  }
  std::vector<int> values;
  for (int v = lo; v <= hi; ++v) values.push_back(v);
  return values;
}

struct SweepOptions {
  std::string n = "2..5";
  std::string m = "2..4";
  std::string lambda = "1..3";
  std::string mu = "1..3";
  std::string parity = "any";
  bool timing = false;
};

int sweep(const SweepOptions& opt, const Common& common, std::ostream& out) {
  const std::vector<int> ns = parse_range(opt.n);
  const std::vector<int> ms = parse_range(opt.m);
  const std::vector<int> lambdas = parse_range(opt.lambda);
  const std::vector<int> mus = parse_range(opt.mu);
  if (opt.parity != "any" && opt.parity != "odd" && opt.parity != "even") {
    throw UsageError("--parity must be any, odd or even");
  }
  std::ostringstream table;
  table << "n\tm\tlambda\tmu\tdegree\tfeasible\tbuilt\tcertified";
  if (opt.timing) table << "\tms";
  table << "\n";
  int failures = 0;
  std::uint64_t cell = 0;
  for (int n : ns) {
    for (int m : ms) {
      for (int lambda : lambdas) {
        for (int mu : mus) {
          long long degree = static_cast<long long>(lambda) * (n - 1) +
                             static_cast<long long>(mu) * n * (m - 1);
          if ((opt.parity == "odd" && degree % 2 == 0) ||
              (opt.parity == "even" && degree % 2 != 0)) {
            continue;
          }
          DecompositionRequest req;
          req.kind = RequestKind::two_class;
          req.n = n;
          req.m = m;
          req.lambda = lambda;
          req.mu = mu;
          const auto start = std::chrono::steady_clock::now();
          const bool feasible = check_feasibility(req).feasible;
          std::string built = "-";
          std::string certified = "-";
          if (feasible) {
            try {
              DecompositionCertificate cert = decompose(req, common.seed + cell);
              built = "yes";
              certified = certify(cert).ok ? "yes" : "no";
            } catch (const std::exception&) {
              built = "no";
            }
            if (certified != "yes") ++failures;
          }
          const auto stop = std::chrono::steady_clock::now();
          table << n << '\t' << m << '\t' << lambda << '\t' << mu << '\t'
                << degree << '\t' << (feasible ? "yes" : "no") << '\t' << built
                << '\t' << certified;
          if (opt.timing) {
            table << '\t' << std::fixed << std::setprecision(2)
                  << std::chrono::duration<double, std::milli>(stop - start)
                         .count();
          }
          table << "\n";
          ++cell;
        }
      }
    }
  }
  Writer(common, out).emit(table.str());
  return failures == 0 ? kExitOk : kExitInternal;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return values;
}

int emit_certificate(const DecompositionCertificate& cert, const Common& common,
                     std::ostream& out) {
  Writer writer(common, out);
  if (common.format == "dot") {
    writer.emit(to_dot(cert));
  } else {
    writer.emit(to_json(cert));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Amalgamation and detachment toolkit for graph decompositions"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--out", common.out_path, "Write output to FILE");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };

  // decompose
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Build a certified decomposition");
  decompose_cmd->require_subcommand(1);
  DecompositionRequest req;
  std::string r_text;
  std::string parts_text;
  std::string base_path;
  bool walecki = false;

  CLI::App* complete_cmd = decompose_cmd->add_subcommand("complete", "lambda K_n");
  complete_cmd->add_option("--n", req.n)->required();
  complete_cmd->add_option("--lambda", req.lambda);
  complete_cmd->add_flag("--walecki", walecki, "Use the rotational construction");
  CLI::App* multi_cmd = decompose_cmd->add_subcommand("multipartite", "lambda K_{n,...,n}");
  multi_cmd->add_option("--n", req.n)->required();
  multi_cmd->add_option("--m", req.m)->required();
  multi_cmd->add_option("--lambda", req.lambda);
  multi_cmd->add_flag("--fair", req.fair, "Require a fair decomposition");
  CLI::App* two_cmd = decompose_cmd->add_subcommand("two-class", "K(n^(m); lambda, mu)");
  two_cmd->add_option("--n", req.n);
  two_cmd->add_option("--m", req.m);
  two_cmd->add_option("--lambda", req.lambda)->required();
  two_cmd->add_option("--mu", req.mu)->required();
  two_cmd->add_option("--parts", parts_text, "Comma-separated part sizes");
  CLI::App* factor_cmd = decompose_cmd->add_subcommand("factorize", "(r_1,...,r_k)-factorization");
  factor_cmd->add_option("--n", req.n)->required();
  factor_cmd->add_option("--m", req.m, "Part count; factorizes lambda K_{n,...,n}");
  factor_cmd->add_option("--lambda", req.lambda);
  factor_cmd->add_option("--r", r_text, "Comma-separated factor degrees")->required();
  CLI::App* embed_cmd = decompose_cmd->add_subcommand("embed", "Extend a colored K_m to K_{m+n}");
  embed_cmd->add_option("--base", base_path, "Colored graph JSON")->required();
  embed_cmd->add_option("--n", req.n)->required();
  embed_cmd->add_option("--r", r_text, "Factor degrees; omit for a Hamiltonian decomposition");
  for (CLI::App* sub : {complete_cmd, multi_cmd, two_cmd, factor_cmd, embed_cmd}) {
    add_common(sub);
    add_format(sub);
  }

  auto run_decompose = [&](RequestKind kind) {
    return [&, kind]() -> int {
      req.kind = kind;
      if (!r_text.empty()) req.r = parse_list(r_text);
      if (!parts_text.empty()) {
        req.part_sizes = parse_list(parts_text);
      } else if (kind == RequestKind::two_class && (req.n < 1 || req.m < 1)) {
        throw UsageError("two-class needs --n and --m, or --parts");
      }
      if (kind == RequestKind::factorization && req.m > 0) {
        req.kind = RequestKind::multipartite_factorization;
      }
      if (kind == RequestKind::embedding) {
        ColoredGraph base = colored_graph_from_json(read_json_file(base_path));
        req.m = base.graph.vertex_count();
        req.base = std::move(base.graph);
        req.base_coloring = std::move(base.coloring);
        if (!req.r.empty()) req.kind = RequestKind::embed_factorization;
      }
      FeasibilityReport report = check_feasibility(req);
      if (!report.feasible) {
        Writer(common, out).emit(feasibility_json(report));
        return kExitInfeasible;
      }
      if (walecki) return emit_certificate(walecki_direct(req.n, req.lambda), common, out);
      return emit_certificate(decompose(req, common.seed), common, out);
    };
  };
  complete_cmd->callback([&] { action = run_decompose(RequestKind::complete); });
  multi_cmd->callback([&] { action = run_decompose(RequestKind::complete_multipartite); });
  two_cmd->callback([&] { action = run_decompose(RequestKind::two_class); });
  factor_cmd->callback([&] { action = run_decompose(RequestKind::factorization); });
  embed_cmd->callback([&] { action = run_decompose(RequestKind::embedding); });

  // color
  CLI::App* color_cmd = app.add_subcommand("color", "Color a graph");
  std::string mode = "even";
  int k = 1;
  std::string graph_path;
  color_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  color_cmd->add_option("--mode", mode)->check(CLI::IsMember({"bee", "even"}));
  color_cmd->add_option("-k", k, "Number of colors")->required();
  add_common(color_cmd);
  add_format(color_cmd);
  color_cmd->callback([&] {
    action = [&]() -> int {
      Multigraph g = graph_from_json(read_json_file(graph_path));
      if (k < 1) throw UsageError("-k must be positive");
      EdgeColoring coloring;
      if (mode == "bee") {
        auto sides = find_bipartition(g);
        if (!sides) {
          err << "graph is not bipartite\n";
          return kExitInfeasible;
        }
        coloring = bee_coloring(g, *sides, k);
      } else {
        for (int d : g.degrees()) {
          if (d % 2 != 0) {
            err << "graph has a vertex of odd degree\n";
            return kExitInfeasible;
          }
        }
        coloring = evenly_equitable_coloring(g, k);
      }
      Writer writer(common, out);
      if (common.format == "dot") {
        writer.emit(to_dot(g, &coloring));
      } else {
        writer.emit(colored_graph_to_json(g, coloring));
      }
      return kExitOk;
    };
  });

  // detach
  CLI::App* detach_cmd = app.add_subcommand("detach", "Detach a colored graph");
  std::string eta_path;
  detach_cmd->add_option("graph", graph_path, "Colored graph JSON")->required();
  detach_cmd->add_option("--eta", eta_path, "eta JSON")->required();
  add_common(detach_cmd);
  add_format(detach_cmd);
  detach_cmd->callback([&] {
    action = [&]() -> int {
      ColoredGraph h = colored_graph_from_json(read_json_file(graph_path));
      std::vector<int> eta = eta_from_json(read_json_file(eta_path));
      DetachmentResult result = detach(h.graph, h.coloring, eta, common.seed);
      Writer writer(common, out);
      if (common.format == "dot") {
        writer.emit(to_dot(result.g, &result.coloring, result.labels));
      } else {
        writer.emit(detachment_to_json(result));
      }
      return kExitOk;
    };
  });

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a decomposition certificate");
  std::string cert_path;
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();
  add_common(verify_cmd);
  verify_cmd->callback([&] {
    action = [&]() -> int {
      std::ifstream in(cert_path);
      if (!in) throw UsageError("cannot open " + cert_path);
      CertifyReport report;
      try {
        report = certify_json(json::parse(in));
      } catch (const json::parse_error& e) {
        report.structural_errors.push_back(std::string("malformed JSON: ") + e.what());
      }
      Writer(common, out).emit(to_json(report));
      return report.ok ? kExitOk : kExitInfeasible;
    };
  });

  // sweep
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Decompose every two-class instance of a grid");
  SweepOptions sweep_opt;
  sweep_cmd->add_option("--n", sweep_opt.n, "Range a..b");
  sweep_cmd->add_option("--m", sweep_opt.m, "Range a..b");
  sweep_cmd->add_option("--lambda", sweep_opt.lambda, "Range a..b");
  sweep_cmd->add_option("--mu", sweep_opt.mu, "Range a..b");
  sweep_cmd->add_option("--parity", sweep_opt.parity, "any, odd or even");
  sweep_cmd->add_flag("--timing", sweep_opt.timing, "Report wall time per cell");
  add_common(sweep_cmd);
  sweep_cmd->callback([&] { action = [&] { return sweep(sweep_opt, common, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    Writer(common, out).emit(feasibility_json(e.report()));
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace amalgam::cli
