// Copyright 2026 The clawlab Authors
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

#include "cli.hpp"

#include <unistd.h>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "clawlab/colorings.hpp"
#include "clawlab/counting.hpp"
#include "clawlab/cutmetric.hpp"
#include "clawlab/entropy.hpp"
#include "clawlab/enumerate.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/graph_io.hpp"
#include "clawlab/graphon.hpp"
#include "clawlab/montecarlo.hpp"
#include "clawlab/parallel.hpp"
#include "clawlab/variational.hpp"

#ifndef CLAWLAB_VERSION
#define CLAWLAB_VERSION "0.0.0"
#endif

namespace clawlab::cli {

namespace {

using nlohmann::json;

CancellationToken* g_token = nullptr;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

extern "C" void on_sigint(int) {
  if (g_token != nullptr) g_token->cancel();
}

struct Context {
  int threads = 0;
  std::uint64_t seed = 0;
  CancellationToken token;
  std::ostream* err = nullptr;
  std::size_t done = 0;
  std::size_t total = 0;
  bool show_progress = false;

  EnumOptions enum_options(bool use_cache = true) {
    EnumOptions o;
    o.threads = threads;
    o.token = &token;
    o.use_cache = use_cache;
    o.progress = [this](std::size_t d, std::size_t t) {
      done = d;
      total = t;
      if (show_progress) *err << "\rprogress " << d << "/" << t << std::flush;
    };
    return o;
  }
};

using Handler = std::function<json(Context&, json&)>;

std::string str(const BigInt& x) { return x.str(); }

json big_array(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json set_to_list(std::uint64_t s) {
  json a = json::array();
  for (int i = 0; i < 64; ++i) {
    if ((s >> i) & 1U) a.push_back(i);
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// K<n>, E<n>, C<n>, P<n>, S<leaves>, claw, paw, petersen, @file (JSON or
/// graph6), or a graph6 string.
Graph parse_graph(const std::string& text) {
  static const std::regex named(R"(([KECPS])(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, named)) {
    const int n = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'K': return complete_graph(n);
      case 'E': return empty_graph(n);
      case 'C': return cycle_graph(n);
      case 'P': return path_graph(n);
      default: return star_graph(n);
    }
  }
  if (text == "claw") return claw_graph();
  if (text == "paw") return paw_graph();
  if (text == "petersen") return petersen_graph();
  if (!text.empty() && text[0] == '@') {
    const std::string body = read_file(text.substr(1));
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') return graph_from_json(json::parse(body));
    auto end = body.find_last_not_of(" \t\r\n");
    return from_graph6(body.substr(first, end - first + 1));
  }
  return from_graph6(text);
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad number: " + item);
  }
  return out;
}

/// constant:<p>, wstar:<gamma>, lambda:<l1,l2,...>, or @file.json.
Graphon parse_graphon(const std::string& text) {
  if (!text.empty() && text[0] == '@') return graphon_from_json(json::parse(read_file(text.substr(1))));
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("graphon spec needs kind:args");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (kind == "constant") return constant_graphon(parse_doubles(args).at(0));
  if (kind == "wstar") return wstar_graphon(parse_doubles(args).at(0));
  if (kind == "lambda") return lambda_graphon(LambdaSeq(parse_doubles(args)));
  throw std::invalid_argument("unknown graphon kind: " + kind);
}

json estimate_json(const EstimateResult& e) {
  return {{"estimate", e.estimate}, {"lower", e.lower},       {"upper", e.upper},
          {"trials", e.trials},     {"successes", e.successes}, {"one_sided", e.one_sided}};
}

json cut_json(const CutResult& r) {
  json j = {{"value", r.value},
            {"exactness", r.exactness == Exactness::kExact ? "exact" : "upper_bound"}};
  if (r.witness) {
    j["witness"] = {{"rows", set_to_list(r.witness->rows)}, {"cols", set_to_list(r.witness->cols)}};
  }
  if (!r.permutation.empty()) j["permutation"] = r.permutation;
  return j;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json graph_summary(const Graph& g) {
  return {{"n", g.order()},
          {"edges", g.edge_count()},
          {"graph6", to_graph6(g)},
          {"claw_free", !has_induced_claw(g)},
          {"cobipartite", is_cobipartite(g).has_value()}};
}

CountMethod parse_method(const std::string& s) {
  if (s == "auto") return CountMethod::kAuto;
  if (s == "scan") return CountMethod::kScan;
  if (s == "dp") return CountMethod::kDp;
  if (s == "edge-subset") return CountMethod::kEdgeSubset;
  throw std::invalid_argument("unknown method: " + s);
}

json curve_json(const std::vector<CurvePoint>& pts, const char* x) {
  json rows = json::array();
  for (const auto& p : pts) rows.push_back({{x, p.x}, {"value", p.y + 0.0}, {"branch_point", p.branch_point}});
  return rows;
}

struct Registry {
  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;

  void add(CLI::App* app, std::string name, Handler h) {
    handlers[app] = {std::move(name), std::move(h)};
  }
};

template <class T>
std::shared_ptr<T> var(T init = T{}) {
  return std::make_shared<T>(std::move(init));
}

void add_rates(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("rates", "Closed forms r*(gamma), r_*(p) and the constants");
  auto gamma = var<std::optional<double>>();
  auto p = var<std::optional<double>>();
  auto group = sub->add_option_group("quantity")->require_option(0, 1);
  group->add_option("--r-star", *gamma, "Entropy density r*(gamma)");
  group->add_option("--r-lower", *p, "Rate function r_*(p)");
  reg.add(sub, "rates", [=](Context&, json& params) -> json {
    if (*gamma) {
      params["r_star"] = **gamma;
      return {{"value", r_star(**gamma)}};
    }
    if (*p) {
      params["r_lower"] = **p;
      return {{"value", r_lower(**p)}};
    }
    return {{"gamma_star", gamma_star()}, {"p_star", p_star()}, {"rho", rho()}, {"kappa", kappa()},
            {"h_rho", binary_entropy(rho())}};
  });
}

void add_variational(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("variational", "Numerical variational problems");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("phi", "Maximize over the two-parameter family at gamma");
    auto gamma = var(0.75);
    sub->add_option("--gamma", *gamma)->required();
    reg.add(sub, "variational phi", [=](Context&, json& params) -> json {
      params["gamma"] = *gamma;
      const auto s = numeric_phi(*gamma);
      return {{"value", s.value}, {"x", s.x}, {"y", s.y}, {"closed_form", r_star(*gamma)}};
    });
  }
  {
    auto* sub = top->add_subcommand("psi", "Maximize the rate objective at p");
    auto p = var(0.5);
    sub->add_option("--p", *p)->required();
    reg.add(sub, "variational psi", [=](Context&, json& params) -> json {
      params["p"] = *p;
      const auto s = numeric_psi(*p);
      return {{"value", s.value}, {"argmax", s.argmax}, {"flat", s.flat}, {"closed_form", -r_lower(*p)}};
    });
  }
  {
    auto* sub = top->add_subcommand("kkt", "Closed-form KKT optimum at c");
    auto c = var(0.5);
    sub->add_option("--c", *c)->required();
    reg.add(sub, "variational kkt", [=](Context&, json& params) -> json {
      params["c"] = *c;
      const auto k = kkt_optimum(*c);
      return {{"x_star", k.x_star}, {"y_star", k.y_star}, {"f_star", k.f_star}};
    });
  }
  {
    auto* sub = top->add_subcommand("vgamma", "Check a lambda sequence against the density constraint");
    auto lambdas = var<std::string>();
    auto gamma = var(0.5);
    sub->add_option("--lambdas", *lambdas, "Comma-separated lambda values")->required();
    sub->add_option("--gamma", *gamma)->required();
    reg.add(sub, "variational vgamma", [=](Context&, json& params) -> json {
      params["lambdas"] = *lambdas;
      params["gamma"] = *gamma;
      const auto v = validate_vgamma(parse_doubles(*lambdas), *gamma);
      json out = {{"valid", v.valid}, {"reason", v.reason}};
      if (v.valid) {
        const auto w = lambda_graphon(LambdaSeq(parse_doubles(*lambdas)));
        out["edge_density"] = edge_density(w);
        out["entropy"] = entropy(w);
        out["r_star"] = r_star(*gamma);
      }
      return out;
    });
  }
  {
    auto* sub = top->add_subcommand("xpstar", "Representative optimizer of the rate problem at p");
    auto p = var(0.5);
    auto branch = var<std::optional<double>>();
    sub->add_option("--p", *p)->required();
    sub->add_option("--branch-gamma", *branch, "Edge density chosen at the branch point");
    reg.add(sub, "variational xpstar", [=](Context&, json& params) -> json {
      params["p"] = *p;
      if (*branch) params["branch_gamma"] = **branch;
      const auto x = xpstar_representative(*p, *branch);
      return {{"graphon", graphon_to_json(x.graphon)},
              {"edge_density", edge_density(x.graphon)},
              {"at_branch", x.at_branch},
              {"formal_upper", x.formal_upper},
              {"proof_upper", x.proof_upper},
              {"bounds_disagree", x.bounds_disagree}};
    });
  }
}

void add_enumerate(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("enumerate", "Exact enumeration of labeled graph classes");
  top->require_subcommand(1);
  auto no_cache = var(false);
  top->add_flag("--no-cache", *no_cache, "Skip the on-disk table cache");
  {
    auto* sub = top->add_subcommand("clawfree", "Count labeled claw-free graphs");
    auto n = var(0);
    auto m = var<std::optional<int>>();
    auto method = var<std::string>("auto");
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m, "Edge count");
    sub->add_option("--method", *method)->check(CLI::IsMember({"auto", "scan", "dp", "edge-subset"}));
    reg.add(sub, "enumerate clawfree", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      if (*m) params["m"] = **m;
      params["method"] = *method;
      const auto r = count_clawfree(*n, *m, parse_method(*method), ctx.enum_options(!*no_cache));
      return {{"count", str(r.count)}, {"method", to_string(r.method)}};
    });
  }
  {
    auto* sub = top->add_subcommand("cobipartite", "Count labeled co-bipartite graphs");
    auto n = var(0);
    auto m = var<std::optional<int>>();
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m, "Edge count (all m when omitted)");
    reg.add(sub, "enumerate cobipartite", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      if (*m) {
        params["m"] = **m;
        return {{"count", str(count_cobipartite(*n, **m, CountMethod::kDp, ctx.enum_options()).count)}};
      }
      const auto t = cobipartite_table(*n);
      BigInt total = 0;
      for (const auto& x : t) total += x;
      return {{"count", str(total)}, {"by_edges", big_array(t)}};
    });
  }
  {
    auto* sub = top->add_subcommand("bipartite", "Count labeled bipartite graphs with k edges");
    auto n = var(0);
    auto k = var(0);
    sub->add_option("--n", *n)->required();
    sub->add_option("--k", *k)->required();
    reg.add(sub, "enumerate bipartite", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["k"] = *k;
      return {{"count", str(count_bipartite_edges(*n, *k, CountMethod::kDp, ctx.enum_options()).count)}};
    });
  }
  {
    auto* sub = top->add_subcommand("table", "Per-edge-count claw-free and co-bipartite table");
    auto n = var(0);
    sub->add_option("--n", *n)->required();
    reg.add(sub, "enumerate table", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      const auto c = clawfree_table(*n, ctx.enum_options(!*no_cache));
      const auto b = cobipartite_table(*n);
      json rows = json::array();
      for (std::size_t m = 0; m < c.size(); ++m) {
        json row = {{"n", *n}, {"m", m}, {"count_clawfree", str(c[m])}, {"count_cobipartite", str(b[m])}};
        row["fraction"] = c[m] == 0 ? json(nullptr)
                                    : json(static_cast<double>(boost::multiprecision::cpp_rational(b[m], c[m])));
        rows.push_back(row);
      }
      return {{"rows", rows}};
    });
  }
  {
    auto* sub = top->add_subcommand("probability", "Exact claw-free probability in G(n, p)");
    auto n = var(0);
    auto p = var(0.5);
    sub->add_option("--n", *n)->required();
    sub->add_option("--p", *p)->required();
    reg.add(sub, "enumerate probability", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["p"] = *p;
      const auto r = exact_clawfree_probability(*n, *p, ctx.enum_options(!*no_cache));
      return {{"probability", r.probability}, {"rate", r.rate},
              {"conditional_edge_density", r.conditional_edge_density}};
    });
  }
  {
    auto* sub = top->add_subcommand("cubic", "Count labeled cubic claw-free graphs");
    auto v = var(0);
    sub->add_option("--v", *v)->required();
    reg.add(sub, "enumerate cubic", [=](Context& ctx, json& params) -> json {
      params["v"] = *v;
      const auto r = count_cubic_clawfree(*v, ctx.enum_options());
      return {{"count", str(r.count)}, {"cubic_total", str(count_cubic(*v))}};
    });
  }
}

void add_colorings(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("colorings", "Red-green-blue edge colorings");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("verify", "Exhaustive check of e_r <= e_b + floor(n/2)");
    auto n = var(0);
    sub->add_option("--n", *n)->required();
    reg.add(sub, "colorings verify", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      const auto r = verify_bound(*n, ctx.threads, &ctx.token);
      json hist = json::object();
      for (const auto& [k, c] : r.excess_histogram) hist[std::to_string(k)] = c;
      return {{"valid", r.valid_count},
              {"violations", r.violations},
              {"equality", r.equality_count},
              {"equality_matches_extremal", r.equality_matches_e},
              {"excess_histogram", hist}};
    });
  }
  {
    auto* sub = top->add_subcommand("extremal", "Constructive extremal colorings");
    auto n = var(0);
    auto kind = var<std::string>("e");
    sub->add_option("--n", *n)->required();
    sub->add_option("--kind", *kind)->check(CLI::IsMember({"e", "f"}));
    reg.add(sub, "colorings extremal", [=](Context&, json& params) -> json {
      params["n"] = *n;
      params["kind"] = *kind;
      const auto codes = *kind == "e" ? extremal_e_codes(*n) : extremal_f_codes(*n);
      return {{"count", codes.size()}, {"codes", codes}};
    });
  }
  {
    auto* sub = top->add_subcommand("stability", "Distance to the extremal family by excess");
    auto n = var(0);
    sub->add_option("--n", *n)->required();
    reg.add(sub, "colorings stability", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      json rows = json::array();
      for (const auto& [excess, b] : stability_profile(*n, ctx.threads)) {
        rows.push_back({{"excess", excess}, {"count", b.count}, {"max_distance", b.max_distance}});
      }
      return {{"rows", rows}};
    });
  }
}

void add_cutnorm(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("cutnorm", "Cut norms and cut distances");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("matrix", "Exact cut norm of a square matrix");
    auto matrix = var<std::string>();
    sub->add_option("--matrix", *matrix, "JSON array of rows, or @file")->required();
    reg.add(sub, "cutnorm matrix", [=](Context& ctx, json& params) -> json {
      params["matrix"] = *matrix;
      const json j = json::parse(matrix->size() && (*matrix)[0] == '@' ? read_file(matrix->substr(1)) : *matrix);
      const auto n = static_cast<Eigen::Index>(j.size());
      Eigen::MatrixXd a(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (j[i].size() != static_cast<std::size_t>(n)) throw std::invalid_argument("matrix must be square");
        for (Eigen::Index k = 0; k < n; ++k) a(i, k) = j[i][k].get<double>();
      }
      return cut_json(matrix_cut_norm(a, ctx.threads, &ctx.token));
    });
  }
  {
    auto* sub = top->add_subcommand("graphs", "Cut distance between two graphs on the same vertex set");
    auto g = var<std::string>();
    auto h = var<std::string>();
    auto relabel = var(false);
    auto restarts = var(4);
    auto iterations = var(2000);
    sub->add_option("--a", *g, "graph6, @file or a name such as K4")->required();
    sub->add_option("--b", *h)->required();
    sub->add_flag("--relabel", *relabel, "Minimize over relabelings of h");
    sub->add_option("--restarts", *restarts);
    sub->add_option("--iterations", *iterations);
    reg.add(sub, "cutnorm graphs", [=](Context& ctx, json& params) -> json {
      params["a"] = *g;
      params["b"] = *h;
      params["relabel"] = *relabel;
      const Graph a = parse_graph(*g), b = parse_graph(*h);
      if (!*relabel) return cut_json(graph_cut_distance(a, b, true, ctx.threads));
      params["restarts"] = *restarts;
      params["iterations"] = *iterations;
      AnnealOptions o;
      o.restarts = *restarts;
      o.iterations = *iterations;
      o.seed = ctx.seed;
      o.threads = ctx.threads;
      return cut_json(delta_hat(a, b, o));
    });
  }
  {
    auto* sub = top->add_subcommand("graphon", "Upper bound on the distance from a graph to a graphon");
    auto g = var<std::string>();
    auto w = var<std::string>();
    sub->add_option("--g", *g)->required();
    sub->add_option("--graphon", *w, "constant:p, wstar:gamma, lambda:l1,l2,... or @file")->required();
    reg.add(sub, "cutnorm graphon", [=](Context& ctx, json& params) -> json {
      params["g"] = *g;
      params["graphon"] = *w;
      AnnealOptions o;
      o.seed = ctx.seed;
      o.threads = ctx.threads;
      return cut_json(graph_graphon_distance(parse_graph(*g), parse_graphon(*w), o));
    });
  }
}

void add_graphon(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("graphon", "Step graphon calculus");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("stats", "Densities and entropies of a step graphon");
    auto w = var<std::string>();
    auto pattern = var<std::string>("claw");
    auto p = var<std::optional<double>>();
    sub->add_option("--graphon", *w)->required();
    sub->add_option("--pattern", *pattern, "Pattern graph for the densities");
    sub->add_option("--p", *p, "Reference density for the relative entropy");
    reg.add(sub, "graphon stats", [=](Context& ctx, json& params) -> json {
      params["graphon"] = *w;
      params["pattern"] = *pattern;
      const Graphon g = parse_graphon(*w);
      const Graph f = parse_graph(*pattern);
      json out = {{"blocks", g.blocks()},
                  {"edge_density", edge_density(g)},
                  {"entropy", entropy(g)},
                  {"hom_density", hom_density(f, g, ctx.threads)},
                  {"induced_density", induced_density(f, g, ctx.threads)}};
      if (*p) {
        params["p"] = **p;
        out["rel_entropy"] = rel_entropy(g, **p);
      }
      return out;
    });
  }
  {
    auto* sub = top->add_subcommand("discretize", "Block averages on the n-grid");
    auto w = var<std::string>();
    auto n = var(0);
    sub->add_option("--graphon", *w)->required();
    sub->add_option("--n", *n)->required();
    reg.add(sub, "graphon discretize", [=](Context&, json& params) -> json {
      params["graphon"] = *w;
      params["n"] = *n;
      return {{"matrix", matrix_json(discretize(parse_graphon(*w), *n))}};
    });
  }
}

void add_sample(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("sample", "Draw one random graph");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("gnp", "Binomial random graph");
    auto n = var(0);
    auto p = var(0.5);
    sub->add_option("--n", *n)->required();
    sub->add_option("--p", *p)->required();
    reg.add(sub, "sample gnp", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["p"] = *p;
      return graph_summary(sample_gnp(*n, *p, ctx.seed));
    });
  }
  {
    auto* sub = top->add_subcommand("gnm", "Uniform random graph with m edges");
    auto n = var(0);
    auto m = var(0);
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m)->required();
    reg.add(sub, "sample gnm", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["m"] = *m;
      return graph_summary(sample_gnm(*n, *m, ctx.seed));
    });
  }
  {
    auto* sub = top->add_subcommand("wgraph", "W-random graph");
    auto n = var(0);
    auto w = var<std::string>();
    sub->add_option("--n", *n)->required();
    sub->add_option("--graphon", *w)->required();
    reg.add(sub, "sample wgraph", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["graphon"] = *w;
      return graph_summary(sample_wgraph(parse_graphon(*w), *n, ctx.seed));
    });
  }
}

void add_mc(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("mc", "Monte Carlo probes");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("clawfree", "Estimate the claw-free probability");
    auto n = var(0);
    auto p = var<std::optional<double>>();
    auto m = var<std::optional<int>>();
    auto trials = var<std::uint64_t>(10000);
    sub->add_option("--n", *n)->required();
    auto* po = sub->add_option("--p", *p);
    sub->add_option("--m", *m)->excludes(po);
    sub->add_option("--trials", *trials);
    reg.add(sub, "mc clawfree", [=](Context& ctx, json& params) -> json {
      if (!*p && !*m) throw UsageError("mc clawfree needs --p or --m");
      params["n"] = *n;
      if (*p) params["p"] = **p;
      if (*m) params["m"] = **m;
      params["trials"] = *trials;
      TrialConfig cfg{*n, *p, *m, *trials, ctx.seed, ctx.threads, &ctx.token};
      const auto e = estimate_clawfree_prob(cfg);
      return {{"probability", estimate_json(e.probability)}, {"rate", e.rate},
              {"rate_lower", e.rate_lower},                  {"rate_upper", e.rate_upper}};
    });
  }
  {
    auto* sub = top->add_subcommand("conditional", "Structure of G(n, p) conditioned on claw-free");
    auto n = var(0);
    auto p = var(0.5);
    auto trials = var<std::uint64_t>(10000);
    sub->add_option("--n", *n)->required();
    sub->add_option("--p", *p)->required();
    sub->add_option("--trials", *trials);
    reg.add(sub, "mc conditional", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["p"] = *p;
      params["trials"] = *trials;
      TrialConfig cfg{*n, *p, std::nullopt, *trials, ctx.seed, ctx.threads, &ctx.token};
      const auto r = conditional_structure(cfg);
      return {{"accepted", r.accepted},
              {"starved", r.starved},
              {"mean_edge_density", r.mean_edge_density},
              {"cobipartite", estimate_json(r.cobipartite)},
              {"mean_defect", r.mean_defect},
              {"defect_exact", r.defect_exact},
              {"cobipartite_fraction_bound", r.cobipartite_fraction_bound}};
    });
  }
  {
    auto* sub = top->add_subcommand("domination", "Exact G(n,m) versus G(n,p) domination battery");
    auto n = var(16);
    auto predicates = var(100);
    sub->add_option("--n", *n);
    sub->add_option("--predicates", *predicates);
    reg.add(sub, "mc domination", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["predicates"] = *predicates;
      const auto b = domination_battery(*n, *predicates, ctx.seed);
      return {{"predicates", b.predicates}, {"violations", b.violations}, {"worst_ratio", b.worst_ratio}};
    });
  }
  {
    auto* sub = top->add_subcommand("concentration", "Edge-count lower tail of G(n, W) on a region");
    auto n = var(0);
    auto region = var<std::string>();
    auto delta = var(0.5);
    auto trials = var<std::uint64_t>(10000);
    sub->add_option("--n", *n)->required();
    sub->add_option("--region", *region, "0/1 step graphon spec")->required();
    sub->add_option("--delta", *delta);
    sub->add_option("--trials", *trials);
    reg.add(sub, "mc concentration", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["region"] = *region;
      params["delta"] = *delta;
      params["trials"] = *trials;
      const auto r = concentration_spotcheck(parse_graphon(*region), *n, *delta, *trials, ctx.seed,
                                             ctx.threads);
      return {{"area", r.area},     {"frequency", r.frequency},   {"bound", r.bound},
              {"margin", r.margin}, {"consistent", r.consistent}, {"trials", r.trials}};
    });
  }
  {
    auto* sub = top->add_subcommand("homogeneity", "Chi-square test: G(n, p) against G(n, W = p)");
    auto n = var(0);
    auto p = var(0.5);
    auto samples = var<std::uint64_t>(10000);
    sub->add_option("--n", *n)->required();
    sub->add_option("--p", *p)->required();
    sub->add_option("--samples", *samples);
    reg.add(sub, "mc homogeneity", [=](Context& ctx, json& params) -> json {
      params["n"] = *n;
      params["p"] = *p;
      params["samples"] = *samples;
      const auto [a, b] = edge_count_histograms(*n, *p, *samples, ctx.seed, ctx.threads);
      const auto r = chi_square_homogeneity(a, b);
      return {{"statistic", r.statistic}, {"dof", r.dof}, {"p_value", r.p_value}};
    });
  }
}

void add_counting(CLI::App& app, Registry& reg) {
  auto* top = app.add_subcommand("counting", "Asymptotic counting and binomial toolbox");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("asymptotic", "Asymptotic co-bipartite count");
    auto n = var(0);
    auto m = var<long long>(0);
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m)->required();
    reg.add(sub, "counting asymptotic", [=](Context&, json& params) -> json {
      params["n"] = *n;
      params["m"] = *m;
      const auto t = bc_asymptotic(*n, *m);
      return {{"gamma", t.gamma},
              {"r", t.r},
              {"series", t.series},
              {"series_terms", t.series_terms},
              {"log2_vertex_binomial", t.log2_vertex_binomial},
              {"log2_edge_binomial", t.log2_edge_binomial},
              {"log2_total", t.log2_total}};
    });
  }
  {
    auto* sub = top->add_subcommand("compare", "Exact against asymptotic co-bipartite count");
    auto n = var(0);
    auto m = var(0);
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m)->required();
    reg.add(sub, "counting compare", [=](Context&, json& params) -> json {
      params["n"] = *n;
      params["m"] = *m;
      const auto c = compare_bc(*n, *m);
      return {{"gamma", c.gamma},
              {"log2_exact", c.log2_exact},
              {"log2_asymptotic", c.log2_asymptotic},
              {"ratio", c.ratio},
              {"log2_lower_bound", c.log2_lower_bound}};
    });
  }
  {
    auto* sub = top->add_subcommand("series", "Series constant at gamma and parity r");
    auto gamma = var(0.75);
    auto r = var(0);
    sub->add_option("--gamma", *gamma)->required();
    sub->add_option("--r", *r)->check(CLI::Range(0, 1));
    reg.add(sub, "counting series", [=](Context&, json& params) -> json {
      params["gamma"] = *gamma;
      params["r"] = *r;
      return {{"value", bc_series_constant(*gamma, *r)}};
    });
  }
  {
    auto* sub = top->add_subcommand("inequalities", "Randomized binomial inequality suite");
    auto tuples = var<std::uint64_t>(10000);
    auto max_n = var(60);
    sub->add_option("--tuples", *tuples, "Tuples per inequality");
    sub->add_option("--max-n", *max_n);
    reg.add(sub, "counting inequalities", [=](Context& ctx, json& params) -> json {
      params["tuples"] = *tuples;
      params["max_n"] = *max_n;
      const auto r = binomial_inequality_suite(*tuples, ctx.seed, *max_n);
      auto item = [](const InequalityItem& i) {
        return json{{"tuples", i.tuples}, {"violations", i.violations}};
      };
      return {{"first", item(r.first)},
              {"second_ratio", item(r.second_ratio)},
              {"second_exponential", item(r.second_exponential)},
              {"third", item(r.third)},
              {"first_negative_j", item(r.first_negative_j)},
              {"second_exponential_negative_j", item(r.second_exponential_negative_j)}};
    });
  }
  {
    auto* sub = top->add_subcommand("hypergeom", "C(n-k, m-l)/C(n, m) against its binomial limit");
    auto n = var(0), m = var(0), k = var(0), l = var(0);
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m)->required();
    sub->add_option("--k", *k)->required();
    sub->add_option("--l", *l)->required();
    reg.add(sub, "counting hypergeom", [=](Context&, json& params) -> json {
      params["n"] = *n;
      params["m"] = *m;
      params["k"] = *k;
      params["l"] = *l;
      const auto h = hypergeom_binomial_ratio(*n, *m, *k, *l);
      return {{"exact", h.exact}, {"limit", h.limit}, {"relative_gap", h.relative_gap}};
    });
  }
}

void add_figure1(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("figure1", "Curves r*(gamma) and r_*(p) with branch points");
  auto step = var(0.005);
  sub->add_option("--step", *step, "Grid step in (0, 1]")->check(CLI::Range(1e-6, 1.0));
  reg.add(sub, "figure1", [=](Context&, json& params) -> json {
    params["step"] = *step;
    const int points = static_cast<int>(std::lround(1.0 / *step));
    const auto f = figure1(std::max(points, 1));
    return {{"entropy_density", curve_json(f.entropy_density, "gamma")},
            {"rate_function", curve_json(f.rate_function, "p")}};
  });
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  if (v.is_structured()) return csv_cell(json(v.dump()));
  return v.dump();
}

}  // namespace

std::string to_csv(const json& result) {
  std::ostringstream out;
  if (!result.is_object()) {
    out << "value\n" << csv_cell(result) << "\n";
    return out.str();
  }
  bool wrote_scalars = false;
  for (const auto& [key, value] : result.items()) {
    const bool table = value.is_array() && !value.empty() && value.front().is_object();
    if (table) continue;
    if (!wrote_scalars) out << "key,value\n";
    wrote_scalars = true;
    out << csv_cell(json(key)) << "," << csv_cell(value) << "\n";
  }
  for (const auto& [key, value] : result.items()) {
    const bool table = value.is_array() && !value.empty() && value.front().is_object();
    if (!table) continue;
    if (out.tellp() > 0) out << "\n";
    out << "# " << key << "\n";
    std::vector<std::string> columns;
    for (const auto& [col, unused] : value.front().items()) columns.push_back(col);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : value) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row[columns[i]]) : "");
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> schema_errors(const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"not an object"};
  auto need = [&](const char* key, bool ok) {
    if (!j.contains(key)) {
      errors.push_back(std::string("missing ") + key);
    } else if (!ok) {
      errors.push_back(std::string("wrong type for ") + key);
    }
  };
  need("command", j.contains("command") && j["command"].is_string());
  need("params", j.contains("params") && j["params"].is_object());
  need("result", j.contains("result") && j["result"].is_object());
  need("runtime_s", j.contains("runtime_s") && j["runtime_s"].is_number());
  need("seed", j.contains("seed") && j["seed"].is_number_unsigned());
  need("version", j.contains("version") && j["version"].is_string());
  need("schema_version", j.contains("schema_version") && j["schema_version"].is_number_integer() &&
                             j["schema_version"].get<int>() == kSchemaVersion);
  for (const auto& [key, unused] : j.items()) {
    static const std::set<std::string> known = {"command", "params",  "result",        "runtime_s",
                                                "seed",    "version", "schema_version"};
    if (!known.count(key)) errors.push_back("unexpected field " + key);
  }
  return errors;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Claw-free graph enumeration, graphon calculus and random graph probes", "clawlab"};
  app.set_version_flag("--version", CLAWLAB_VERSION);
  app.require_subcommand(1);
  int threads = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Random seed");
  auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  Registry reg;
  add_rates(app, reg);
  add_variational(app, reg);
  add_enumerate(app, reg);
  add_colorings(app, reg);
  add_cutnorm(app, reg);
  add_graphon(app, reg);
  add_sample(app, reg);
  add_mc(app, reg);
  add_counting(app, reg);
  add_figure1(app, reg);
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* leaf = &app;
  for (;;) {
    auto chosen = leaf->get_subcommands();
    if (chosen.empty()) break;
    leaf = chosen.front();
  }
  const auto it = reg.handlers.find(leaf);
  if (it == reg.handlers.end()) {
    err << app.help();
    return 2;
  }
  if (leaf->get_name() == "figure1" && format_opt->count() == 0) format = "csv";

  Context ctx;
  ctx.threads = threads;
  ctx.seed = seed;
  ctx.err = &err;
  ctx.show_progress = &err == &std::cerr && isatty(STDERR_FILENO);
  g_token = &ctx.token;
  auto previous = std::signal(SIGINT, on_sigint);

  json output = {{"command", it->second.first},
                 {"params", json::object()},
                 {"seed", seed},
                 {"version", CLAWLAB_VERSION},
                 {"schema_version", kSchemaVersion}};
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    output["result"] = it->second.second(ctx, output["params"]);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << leaf->help();
    code = 2;
  } catch (const Cancelled&) {
    err << "\ncancelled";
    if (ctx.total > 0) err << " after " << ctx.done << "/" << ctx.total << " tasks";
    err << "\n";
    code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  }
  std::signal(SIGINT, previous);
  g_token = nullptr;
  if (ctx.show_progress && ctx.total > 0) err << "\n";
  if (code != 0) return code;
  output["runtime_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = format == "csv" ? to_csv(output["result"]) : output.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 1;
    }
    file << text;
  }
  return 0;
}

}  // namespace clawlab::cli
