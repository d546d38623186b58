#include "gainrank/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gainrank/builders.hpp"
#include "gainrank/catalog.hpp"
#include "gainrank/classify.hpp"
#include "gainrank/error.hpp"
#include "gainrank/graph_file.hpp"
#include "gainrank/harness.hpp"
#include "gainrank/theorems.hpp"

namespace gainrank::cli {
namespace {

using nlohmann::json;

struct Common {
  double tol = kDefaultTol;
  bool json = false;
};

struct Outcome {
  json result;
  std::string text;
  int fragile = 0;
  json failures = json::array();
  int status = kExitOk;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.tol, "zero and type-boundary tolerance")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "machine-readable output");
}

GainGraph read_graph(const std::string& file, std::istream& in) {
  std::stringstream buf;
  if (file.empty() || file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + file + "'");
    buf << f.rdbuf();
  }
  return parse_graph(buf.str());
}

json inertia_json(const InertiaTriple& t) {
  return {{"pos", t.pos}, {"neg", t.neg}, {"zero", t.zero}, {"rank", t.rank()}};
}

json prediction_json(const RankPrediction& p) {
  json j = {{"lower", p.lower}, {"provenance", p.provenance}};
  j["kind"] = p.kind == RankPrediction::Kind::Exact    ? "exact"
              : p.kind == RankPrediction::Kind::Bounds ? "bounds"
                                                        : "lower-bound";
  j["upper"] = p.upper ? json(*p.upper) : json(nullptr);
  return j;
}

std::string family_name(const GainGraph& g) {
  switch (g.family()) {
    case GraphFamily::Forest: return "forest";
    case GraphFamily::Tree: return "tree";
    case GraphFamily::Unicyclic: return "unicyclic";
    case GraphFamily::Bicyclic: return "bicyclic";
    case GraphFamily::Other: return "other";
  }
  return "other";
}

std::vector<Vertex> parse_cycle_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad vertex '" + item + "' in --cycle");
    }
  }
  return out;
}

// Comma-separated gain tokens; a c: token owns the comma inside it.
std::vector<UnitGain> parse_gain_list(const std::string& text) {
  std::vector<std::string> pieces;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) pieces.push_back(item);
  std::vector<UnitGain> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string token = pieces[i];
    if (token.starts_with("c:")) {
      if (i + 1 >= pieces.size()) throw Error(ErrorCode::ParseError, "incomplete gain '" + token + "'");
      token += "," + pieces[++i];
    }
    out.push_back(parse_gain_token(token));
  }
  return out;
}

Outcome do_rank(const GainGraph& g, double tol) {
  const int r = rank(g, tol);
  return {json{{"rank", r}}, std::to_string(r) + "\n"};
}

Outcome do_inertia(const GainGraph& g, double tol) {
  const InertiaTriple t = inertia(g, tol);
  return {inertia_json(t), to_string(t) + "\n"};
}

Outcome do_cycle_type(const GainGraph& g, const std::string& cycle, double tol) {
  const auto verts = parse_cycle_list(cycle);
  const CycleClassification c = classify_cycle(cycle_walk(g, verts), tol);
  std::ostringstream text;
  text << to_string(c.type) << " residual=" << c.residual << (c.fragile ? " (fragile)" : "") << "\n";
  return {json{{"type", to_string(c.type)}, {"residual", c.residual}, {"fragile", c.fragile}}, text.str(),
          c.fragile ? 1 : 0};
}

Outcome do_classify(const GainGraph& g, double tol) {
  Outcome o;
  std::ostringstream text;
  json& j = o.result;
  j["family"] = family_name(g);
  text << "family: " << family_name(g) << "\n";

  const ReductionTrace trace = reduce(g);
  json steps = json::array();
  std::string line;
  for (const ReductionStep& s : trace.steps) {
    if (s.kind == ReductionStep::Kind::Twin) {
      steps.push_back({{"kind", "twin"}, {"vertex", s.v}});
      line += " twin " + std::to_string(s.v) + ";";
    } else {
      steps.push_back({{"kind", "pendant-pair"}, {"vertex", s.v}, {"neighbor", s.u}});
      line += " pair " + std::to_string(s.v) + "-" + std::to_string(s.u) + ";";
    }
  }
  j["reduction"] = {{"steps", steps},
                    {"rank_offset", trace.rank_offset},
                    {"residual_order", trace.residual.graph.order()},
                    {"residual_size", trace.residual.graph.size()}};
  text << "reduction:" << (line.empty() ? " none" : line) << "\n"
       << "residual: " << trace.residual.graph.order() << " vertices, " << trace.residual.graph.size()
       << " edges, rank offset " << trace.rank_offset << "\n";

  const bool bicyclic = g.family() == GraphFamily::Bicyclic;
  j["base"] = nullptr;
  j["table"] = nullptr;
  j["predicted"] = nullptr;
  if (bicyclic) {
    const BicyclicBase base = bicyclic_base(g);
    j["base"] = to_string(base.descriptor);
    text << "base: " << to_string(base.descriptor) << "\n";

    if (auto m = match_catalog(g); m && (!has_pendants(m->id) || pendant_twins(g).empty())) {
      const ConditionReport report = evaluate_rows(m->id, m->relabeled, tol);
      json clauses = json::array();
      for (const ClauseReport& c : report.clauses) {
        json cj = {{"row", c.row}, {"description", c.description}, {"holds", c.holds}};
        if (c.cycle) cj["type"] = to_string(c.cycle->type);
        if (c.residual) cj["residual"] = *c.residual;
        clauses.push_back(cj);
      }
      j["table"] = {{"catalog", to_string(m->id)},
                    {"satisfied", report.satisfied},
                    {"predicted_rank", report.predicted_rank ? json(*report.predicted_rank) : json(nullptr)},
                    {"clauses", clauses}};
      text << "catalog: " << to_string(m->id) << ", table row "
           << (report.satisfied ? "holds, rank " + std::to_string(*report.predicted_rank) : std::string("does not hold"))
           << "\n";
      if (report.fragile) o.fragile = 1;
    }
    const RankPrediction p = predict_rank(g, tol);
    j["predicted"] = prediction_json(p);
    text << "predicted rank: " << to_string(p) << (p.provenance.empty() ? "" : " [" + p.provenance + "]") << "\n";
  }
  const int r = rank(g, tol);
  j["rank"] = r;
  text << "numeric rank: " << r << "\n";
  o.text = text.str();
  return o;
}

Outcome do_catalog(const std::string& id_text, const std::string& gains) {
  const CatalogId id = parse_catalog_id(id_text);
  const GainGraph g = gains.empty() ? catalog_graph(id) : with_gains(catalog_graph(id), parse_gain_list(gains));
  const std::string text = emit_graph(g);
  return {json{{"catalog", to_string(id)}, {"graph", text}}, text};
}

Outcome do_verify(const TrialSpec& spec) {
  const Report r = verify_claim(spec);
  Outcome o;
  o.result = json::parse(r.to_json());
  o.fragile = r.fragile;
  o.failures = o.result["failures"];
  std::ostringstream text;
  text << r.claim << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials << " trials, "
       << r.forward_checks << " constructed, " << r.backward_checks << " random, " << r.fragile
       << " fragile, " << r.failure_count << " failures)\n";
  for (const Failure& f : r.failures) {
    text << "expected " << f.expected << ", observed " << f.observed << "\n" << f.input;
  }
  o.text = text.str();
  o.status = r.passed() ? kExitOk : kExitFailure;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and inertia of complex unit gain graphs", "gainrank"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string cycle;
  std::string catalog_id;
  std::string gains;
  TrialSpec spec;
  spec.trials = 100;

  auto* rank_cmd = app.add_subcommand("rank", "numeric rank of the adjacency matrix");
  auto* inertia_cmd = app.add_subcommand("inertia", "positive, negative and zero eigenvalue counts");
  auto* classify_cmd = app.add_subcommand("classify", "structure, reduction and predicted rank");
  auto* cycle_cmd = app.add_subcommand("cycle-type", "type A-E of a cycle");
  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog graph as a graph file");
  auto* verify_cmd = app.add_subcommand("verify", "run a randomized claim check");

  for (auto* sub : {rank_cmd, inertia_cmd, classify_cmd, cycle_cmd}) {
    sub->add_option("FILE", file, "graph file, '-' or absent for stdin");
    add_common(sub, common);
  }
  cycle_cmd->add_option("--cycle", cycle, "comma-separated vertices v1,v2,...")->required();
  catalog_cmd->add_option("ID", catalog_id, "G1 .. G22")->required();
  catalog_cmd->add_option("--gains", gains, "comma-separated gains in sorted edge order");
  add_common(catalog_cmd, common);
  verify_cmd->add_option("CLAIM", spec.claim, "claim identifier")->required();
  verify_cmd->add_option("--trials", spec.trials, "number of trials")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", spec.seed, "random seed");
  verify_cmd->add_option("--max-n", spec.max_n, "largest random graph order")->check(CLI::Range(2, 40));
  add_common(verify_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  std::string input = file.empty() ? "-" : file;
  Outcome o;
  try {
    if (verify_cmd->parsed()) {
      command = "verify";
      input = spec.claim;
      try {
        spec.claim = canonical_claim(spec.claim);
      } catch (const Error& e) {
        err << "error: " << e.what() << "\nknown claims:";
        for (const auto& id : claim_ids()) err << " " << id;
        err << "\n";
        return kExitUsage;
      }
      o = do_verify(spec);
    } else if (catalog_cmd->parsed()) {
      command = "catalog";
      input = catalog_id;
      o = do_catalog(catalog_id, gains);
    } else {
      const GainGraph g = read_graph(file, in);
      if (rank_cmd->parsed()) {
        command = "rank";
        o = do_rank(g, common.tol);
      } else if (inertia_cmd->parsed()) {
        command = "inertia";
        o = do_inertia(g, common.tol);
      } else if (classify_cmd->parsed()) {
        command = "classify";
        o = do_classify(g, common.tol);
      } else {
        command = "cycle-type";
        o = do_cycle_type(g, cycle, common.tol);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (common.json) {
    const json j = {{"command", command}, {"input", input},   {"tol", common.tol},
                    {"result", o.result}, {"fragile", o.fragile}, {"failures", o.failures}};
    out << j.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.status;
}

}  // namespace gainrank::cli
