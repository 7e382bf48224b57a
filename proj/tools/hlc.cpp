#include <iostream>

#include <CLI11.hpp>

#include "hlc/grammars.hpp"
#include "hlc/io.hpp"
#include "hlc/prover.hpp"
#include "hlc/string_calculi.hpp"

using namespace hlc;
using io::json;

namespace {

enum Exit { Yes = 0, No = 1, Usage = 2, Budget = 3 };

// "builtin:<name>" selects a fixture grammar instead of a file.
json load(const std::string& arg) {
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) != 0) return io::read_file(arg);
  std::string name = arg.substr(prefix.size());
  auto hlgs = grammars::builtin_hlgs();
  if (auto it = hlgs.find(name); it != hlgs.end()) return io::to_json(it->second);
  auto hrgs = grammars::builtin_hrgs();
  if (auto it = hrgs.find(name); it != hrgs.end()) return io::to_json(it->second);
  throw Error(ErrorCode::ParseError, "no builtin grammar named " + name);
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_prove(const std::string& file, const std::string& mode_name, const std::string& tree_out,
              const std::string& dot_out, long budget_ms, bool deterministic, unsigned jobs) {
  auto mode = Mode::parse(mode_name);
  if (!mode) throw CLI::ValidationError("--mode", "unknown mode " + mode_name);
  Sequent s = io::sequent_from_json(io::read_file(file));
  validate(s);
  SearchOptions opt;
  opt.mode = *mode;
  opt.budget.time = std::chrono::milliseconds(budget_ms);
  if (deterministic) opt.budget.time = std::chrono::hours(24 * 365);
  ProofResult r;
  if (jobs > 1 && !deterministic)
    r = prove_all({s}, opt, jobs).front();
  else
    r = prove(s, opt);
  json out{{"verdict", to_string(r.verdict)}, {"mode", mode->name()}, {"search_nodes", r.stats.nodes}};
  if (r.tree) {
    out["rules"] = rule_count(*r.tree);
    if (!tree_out.empty()) io::write_file(tree_out, io::to_json(*r.tree).dump(2) + "\n");
    if (!dot_out.empty()) io::write_file(dot_out, io::to_dot(*r.tree));
  }
  print(out);
  if (r.verdict == Verdict::BudgetExceeded) return Budget;
  return r.verdict == Verdict::Derivable ? Yes : No;
}

int cmd_check(const std::string& seq_file, const std::string& tree_file, const std::string& mode_name) {
  auto mode = Mode::parse(mode_name);
  if (!mode) throw CLI::ValidationError("--mode", "unknown mode " + mode_name);
  Sequent s = io::sequent_from_json(io::read_file(seq_file));
  DerivationPtr t = io::tree_from_json(io::read_file(tree_file));
  VerifyOptions vo;
  vo.mode = *mode;
  VerifyResult v = verify_tree(*t, vo);
  if (v.ok && (t->conclusion.succedent != s.succedent || !isomorphic(t->conclusion.antecedent, s.antecedent)))
    v = VerifyResult{false, "root", "conclusion differs from the given sequent"};
  json out{{"ok", v.ok}};
  if (!v.ok) {
    out["path"] = v.path;
    out["message"] = v.message;
  }
  print(out);
  return v.ok ? Yes : No;
}

int cmd_member(const std::string& grammar_file, const std::string& graph_file, const std::string& witness_out,
               long budget_ms, unsigned jobs) {
  json gj = load(grammar_file);
  Graph h = io::graph_from_json(io::read_file(graph_file));
  if (gj.contains("productions")) {
    bool m = hrg_member(io::hrg_from_json(gj), h);
    print({{"verdict", to_string(m ? Membership::Member : Membership::NotMember)}});
    return m ? Yes : No;
  }
  Hlg g = io::hlg_from_json(gj);
  MemberOptions opt;
  opt.budget = std::chrono::milliseconds(budget_ms);
  opt.jobs = jobs;
  MemberResult r = hlg_member(g, h, opt);
  json out{{"verdict", to_string(r.verdict)}, {"assignments", r.assignments}};
  if (r.verdict == Membership::Member) {
    json f = json::array();
    for (const auto& t : r.relabeling) f.push_back(io::to_json(t));
    out["relabeling"] = f;
    if (!witness_out.empty())
      io::write_file(witness_out, json{{"relabeling", f}, {"tree", io::to_json(*r.tree)}}.dump(2) + "\n");
  }
  print(out);
  if (r.verdict == Membership::BudgetExceeded) return Budget;
  return r.verdict == Membership::Member ? Yes : No;
}

int cmd_translate(const std::string& calc_name, const std::string& text) {
  auto c = str::calc_from_string(calc_name);
  if (!c) throw CLI::ValidationError("--calc", "unknown calculus " + calc_name);
  print(io::to_json(str::translate(str::parse_sequent(text, *c), *c)));
  return Yes;
}

int cmd_enumerate(const std::string& file, std::size_t max_edges) {
  Hrg g = io::hrg_from_json(load(file));
  hrg_derive(g, max_edges, [](const Graph& h) { print(io::to_json(io::canonical_graph(h))); });
  return Yes;
}

int cmd_render(const std::string& file, const std::string& dot_out) {
  json j = load(file);
  std::string dot;
  if (j.contains("conclusion"))
    dot = io::to_dot(*io::tree_from_json(j));
  else if (j.contains("antecedent"))
    dot = io::to_dot(io::sequent_from_json(j).antecedent);
  else {
    bool plain = true;
    if (j.contains("edges") && j["edges"].is_array())
      for (const auto& e : j["edges"])
        if (!e.contains("label") || !e["label"].is_object() || !e["label"].contains("sym")) plain = false;
    dot = plain ? io::to_dot(io::graph_from_json(j)) : io::to_dot(io::typed_graph_from_json(j));
  }
  if (dot_out.empty())
    std::cout << dot;
  else
    io::write_file(dot_out, dot);
  return Yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Lambek calculus toolkit"};
  app.require_subcommand(1);
  int code = Usage;

  std::string file, file2, mode = "hl", tree_out, dot_out, witness_out, calc, text;
  long budget_ms = 10000;
  bool deterministic = false;
  unsigned jobs = 1;
  std::size_t max_edges = 6;
  std::vector<std::string> files;

  auto* prove = app.add_subcommand("prove", "Search for a derivation of a sequent");
  prove->add_option("sequent", file, "Sequent JSON")->required();
  prove->add_option("--mode", mode, "hl | hl+w | hl+c | hl+wc | hmalc | hmalc+w | hmalc+c | hmalc+wc");
  prove->add_option("--tree", tree_out, "Write the derivation tree as JSON");
  prove->add_option("--dot", dot_out, "Write the derivation tree as DOT");
  prove->add_option("--budget-ms", budget_ms, "Time budget");
  prove->add_flag("--deterministic", deterministic, "Node budget only, single thread");
  prove->add_option("--jobs", jobs, "Worker threads");
  prove->callback([&] { code = cmd_prove(file, mode, tree_out, dot_out, budget_ms, deterministic, jobs); });

  auto* check = app.add_subcommand("check-tree", "Verify a derivation tree against a sequent");
  check->add_option("sequent", file, "Sequent JSON")->required();
  check->add_option("tree", file2, "Tree JSON")->required();
  check->add_option("--mode", mode, "Calculus the tree must stay within");
  check->callback([&] { code = cmd_check(file, file2, mode); });

  auto* member = app.add_subcommand("member", "Decide membership of a graph in a grammar's language");
  member->add_option("grammar", file, "HLG or HRG JSON, or builtin:<name>")->required();
  member->add_option("graph", file2, "Hypergraph JSON")->required();
  member->add_option("--witness", witness_out, "Write relabeling and tree");
  member->add_option("--budget-ms", budget_ms, "Time budget");
  member->add_option("--jobs", jobs, "Worker threads");
  member->callback([&] { code = cmd_member(file, file2, witness_out, budget_ms, jobs); });

  auto* translate = app.add_subcommand("translate", "Embed a string-calculus sequent");
  translate->add_option("--calc", calc, "L | LP | NLd | LW")->required();
  translate->add_option("sequent", text, "e.g. \"s/p, p -> s\"")->required();
  translate->callback([&] { code = cmd_translate(calc, text); });

  auto* hrg2hlg = app.add_subcommand("hrg2hlg", "Convert an HRG in weak Greibach form");
  hrg2hlg->add_option("hrg", file, "HRG JSON or builtin:<name>")->required();
  hrg2hlg->callback([&] {
    print(io::to_json(hrg_to_hlg(io::hrg_from_json(load(file)))));
    code = Yes;
  });

  auto* intersect = app.add_subcommand("intersect", "HLG for the intersection of HRG languages");
  intersect->add_option("hrgs", files, "Two or more HRG JSON files")->required()->expected(2, -1);
  intersect->callback([&] {
    std::vector<Hrg> gs;
    for (const auto& f : files) gs.push_back(io::hrg_from_json(load(f)));
    print(io::to_json(intersect_hrgs(gs)));
    code = Yes;
  });

  auto* enumerate = app.add_subcommand("enumerate", "List an HRG's language up to a size");
  enumerate->add_option("hrg", file, "HRG JSON or builtin:<name>")->required();
  enumerate->add_option("--max-edges", max_edges, "Edge bound")->required();
  enumerate->callback([&] { code = cmd_enumerate(file, max_edges); });

  auto* render = app.add_subcommand("render", "DOT for a graph, sequent or tree");
  render->add_option("input", file, "JSON file")->required();
  render->add_option("--dot", dot_out, "Output file (default stdout)");
  render->callback([&] { code = cmd_render(file, dot_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? Yes : Usage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return Usage;
  }
  return code;
}
