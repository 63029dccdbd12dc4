#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dlbridge/defaults.h"
#include "dlbridge/generator.h"
#include "dlbridge/parser.h"
#include "dlbridge/printer.h"
#include "dlbridge/semantics.h"
#include "dlbridge/transforms.h"
#include "dlbridge/verify.h"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace dlbridge;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

struct Global {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t cap_hb = 16;
  std::size_t cap_atoms = 24;
  std::size_t workers = 1;
  bool trace = false;
  bool explain = false;
  std::string dump_cnf;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EvalOptions eval_options(const Global& g) {
  EvalOptions o;
  o.entail.exhaustive_cap = g.cap_atoms;
  return o;
}

EnumerateOptions enumerate_options(const Global& g) {
  EnumerateOptions o;
  o.cap_hb = g.cap_hb;
  if (g.trace || g.explain) o.trace = &std::cerr;
  return o;
}

ExtensionOptions extension_options(const Global& g) {
  ExtensionOptions o;
  o.entail.exhaustive_cap = g.cap_atoms;
  if (g.trace || g.explain) o.trace = &std::cerr;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void dump_cnf(const Global& g, Oracle& oracle) {
  if (g.dump_cnf.empty()) return;
  std::ofstream out(g.dump_cnf);
  if (!out) throw UsageError("cannot write " + g.dump_cnf);
  oracle.solver().dump_dimacs(out);
}

json atoms_json(const std::vector<Atom>& atoms) {
  json a = json::array();
  for (const auto& x : atoms) a.push_back(to_string(x));
  return a;
}

json set_json(ProgramContext& ctx, const AtomSet& s) { return atoms_json(ctx.atoms_of(s)); }

std::string kind_of(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  if (ext == ".onto") return "ontology";
  if (ext == ".dth") return "theory";
  return "program";
}

int cmd_parse(const Global& g, const std::string& path) {
  std::string kind = kind_of(path);
  json j;
  std::string text;
  if (kind == "ontology") {
    auto o = load_ontology(path);
    text = to_string(o);
    j = {{"kind", kind}, {"axioms", o.axioms.size()}, {"text", text}};
  } else if (kind == "theory") {
    auto t = load_default_theory(path);
    text = to_string(t);
    j = {{"kind", kind}, {"facts", t.facts.size()}, {"defaults", t.defaults.size()}, {"text", text}};
  } else {
    auto p = load_program(path);
    ProgramContext ctx(p, eval_options(g));
    text = to_string(p);
    json rules = json::array();
    for (const auto& r : p.rules) rules.push_back(to_string(r));
    j = {{"kind", kind},
         {"rules", rules},
         {"herbrand_base", atoms_json(ctx.herbrand_base())},
         {"constants", ctx.constants()},
         {"flags", validation_flags(p)},
         {"text", text}};
    if (!g.json)
      for (const auto& f : validation_flags(p)) std::cerr << "warning: " << f << '\n';
  }
  if (g.json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
  return kOk;
}

void explain_grounding(const Global& g, ProgramContext& ctx) {
  if (!g.explain) return;
  for (const auto& f : ctx.reasoner().grounded().all()) std::cerr << "grounded " << to_string(f) << '\n';
}

int cmd_classify(const Global& g, const std::string& path) {
  ProgramContext ctx(load_program(path), eval_options(g));
  const auto& rep = ctx.classification();
  explain_grounding(g, ctx);
  json atoms = json::array();
  for (std::size_t i = 0; i < ctx.dl_atoms().size(); ++i) {
    const auto& c = rep.atoms[i];
    json a = {{"index", i}, {"dl_atom", to_string(ctx.dl_atoms()[i])}, {"monotonic", c.monotonic}};
    json in = json::array();
    for (auto k : ctx.input_atoms(i)) in.push_back(to_string(ctx.herbrand_base()[k]));
    a["input_atoms"] = in;
    if (c.witness) a["witness"] = {{"satisfied", set_json(ctx, c.witness->smaller)}, {"failed", set_json(ctx, c.witness->larger)}};
    atoms.push_back(a);
  }
  json j = {{"dl_atoms", atoms},
            {"positive", rep.program.positive},
            {"canonical", rep.program.canonical},
            {"normal", rep.program.normal}};
  dump_cnf(g, ctx.reasoner().oracle());
  if (g.json) {
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < ctx.dl_atoms().size(); ++i) {
    const auto& c = rep.atoms[i];
    std::cout << "dl_" << i << "  " << to_string(ctx.dl_atoms()[i]) << "  "
              << (c.monotonic ? "monotonic" : "nonmonotonic");
    if (c.witness && (g.explain || !c.monotonic))
      std::cout << "  witness " << ctx.show(c.witness->smaller) << " satisfies, " << ctx.show(c.witness->larger)
                << " fails";
    std::cout << '\n';
  }
  std::cout << "positive " << (rep.program.positive ? "yes" : "no") << ", canonical "
            << (rep.program.canonical ? "yes" : "no") << ", normal " << (rep.program.normal ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_answersets(const Global& g, const std::string& path, const std::string& semantics, const std::string& strategy) {
  auto k = parse_semantics(semantics);
  if (!k) throw UsageError("unknown semantics " + semantics);
  ProgramContext ctx(load_program(path), eval_options(g));
  auto opts = enumerate_options(g);
  if (strategy == "baseline") opts.strategy = Enumeration::kBaseline;
  else if (strategy != "supported") throw UsageError("unknown strategy " + strategy);
  explain_grounding(g, ctx);
  auto sets = enumerate_answer_sets(ctx, *k, opts);
  dump_cnf(g, ctx.reasoner().oracle());
  if (g.json) {
    json a = json::array();
    for (const auto& s : sets) a.push_back(set_json(ctx, s));
    json j = {{"semantics", to_string(*k)}, {"answer_sets", a}, {"herbrand_base", atoms_json(ctx.herbrand_base())},
              {"dl_evaluations", ctx.dl_evaluations()}, {"dl_cache_hits", ctx.dl_cache_hits()}};
    std::cout << j.dump(2) << '\n';
  } else {
    if (sets.empty()) std::cout << "no " << to_string(*k) << " answer sets\n";
    for (const auto& s : sets) std::cout << ctx.show(s) << '\n';
  }
  return kOk;
}

std::optional<Pass> parse_pass(const std::string& s) {
  for (auto p : {Pass::kPi, Pass::kPiStar, Pass::kSigma, Pass::kPiPrime})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::optional<Encoding> parse_encoding(const std::string& s) {
  for (auto e : {Encoding::kTau, Encoding::kTauPrime, Encoding::kTauStar, Encoding::kTauStarPrime})
    if (to_string(e) == s) return e;
  return std::nullopt;
}

int cmd_translate(const Global& g, const std::string& path, const std::string& pass_name, const std::string& out,
                  const std::string& map_path) {
  auto pass = parse_pass(pass_name);
  if (!pass) throw UsageError("unknown pass " + pass_name);
  ProgramContext ctx(load_program(path), eval_options(g));
  auto t = translate(ctx, *pass);
  if (!out.empty() && out != "-") {
    fs::path onto = fs::path(out).replace_extension(".onto");
    write_text(onto.string(), to_string(t.program.ontology));
    t.program.ontology_path = onto.filename().string();
  }
  write_text(out, to_string(t.program));
  if (!map_path.empty()) {
    json syms = json::array();
    for (const auto& s : t.dl_symbols)
      syms.push_back({{"symbol", s.name}, {"dl_atom", to_string(s.atom)}, {"holds_when_dl_atom_fails", s.negated_meaning}});
    json m = {{"pass", to_string(*pass)},
              {"predicate_copies", t.predicate_copies},
              {"dl_symbols", syms},
              {"fresh_names", t.fresh_names}};
    write_text(map_path, m.dump(2) + "\n");
  }
  return kOk;
}

int cmd_encode(const Global& g, const std::string& path, const std::string& target, const std::string& out) {
  auto e = parse_encoding(target);
  if (!e) throw UsageError("unknown target " + target);
  ProgramContext ctx(load_program(path), eval_options(g));
  auto r = encode(ctx, *e);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  write_text(out, to_string(r.theory));
  return kOk;
}

std::vector<Atom> conclusion_atoms(const DefaultTheory& t) {
  std::set<Atom> out;
  for (const auto& d : t.defaults) {
    const Formula& c = d.conclusion;
    if (c.kind() == Formula::Kind::kAtom) out.insert(c.get_atom());
    else if (c.kind() == Formula::Kind::kNot && c.lhs().kind() == Formula::Kind::kAtom) out.insert(c.lhs().get_atom());
  }
  return {out.begin(), out.end()};
}

int cmd_extensions(const Global& g, const std::string& path, const std::string& program_path, bool oracle) {
  auto t = load_default_theory(path);
  auto opts = extension_options(g);
  std::ofstream cnf;
  if (!g.dump_cnf.empty()) {
    cnf.open(g.dump_cnf);
    opts.entail.cnf_dump = &cnf;
  }
  std::vector<Atom> hb;
  if (!program_path.empty()) {
    ProgramContext ctx(load_program(program_path), eval_options(g));
    hb = ctx.herbrand_base();
  } else {
    hb = conclusion_atoms(t);
  }
  auto exts = oracle ? extensions_by_generating_defaults(t, opts) : enumerate_extensions(t, opts);
  json a = json::array();
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const auto& e = exts[i];
    json gens = json::array();
    std::vector<std::string> gs;
    for (std::size_t k = t.facts.size(); k < e.generators.size(); ++k) {
      gens.push_back(to_string(e.generators[k]));
      gs.push_back(to_string(e.generators[k]));
    }
    auto atoms = extension_to_interp(t, e, hb, opts);
    a.push_back({{"conclusions", gens}, {"defaults", e.defaults}, {"consistent", e.consistent}, {"atoms", atoms_json(atoms)}});
    if (!g.json) {
      std::cout << "extension " << i + 1 << ": Th(W + {";
      for (std::size_t k = 0; k < gs.size(); ++k) std::cout << (k ? ", " : "") << gs[k];
      std::cout << "})" << (e.consistent ? "" : " inconsistent") << "  atoms " << to_string(atoms) << '\n';
    }
  }
  if (g.json) std::cout << json({{"extensions", a}, {"facts", t.facts.size()}}).dump(2) << '\n';
  else if (exts.empty()) std::cout << "no extensions\n";
  return kOk;
}

json outcome_json(const CheckOutcome& o) {
  json j = {{"check_id", o.check_id}, {"instance_id", o.instance_id}, {"pass", o.pass}};
  if (o.skipped) j["skipped"] = o.reason;
  if (!o.pass) j["counterexample"] = {{"program", o.counterexample}, {"comparison", o.reason}};
  return j;
}

std::optional<CheckOutcome> outcome_from_json(const json& j) {
  try {
    CheckOutcome o;
    o.check_id = j.at("check_id");
    o.instance_id = j.at("instance_id");
    o.pass = j.at("pass");
    if (j.contains("skipped")) {
      o.skipped = true;
      o.reason = j["skipped"];
    }
    if (j.contains("counterexample")) {
      o.counterexample = j["counterexample"].at("program");
      o.reason = j["counterexample"].at("comparison");
    }
    return o;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Verdicts persisted under DLBRIDGE_CACHE_DIR, keyed by check, program and fault.
class VerdictCache {
 public:
  VerdictCache() {
    if (const char* d = std::getenv("DLBRIDGE_CACHE_DIR"); d && *d) {
      dir_ = d;
      std::error_code ec;
      fs::create_directories(dir_, ec);
      if (ec) dir_.clear();
    }
  }
  bool enabled() const { return !dir_.empty(); }
  fs::path path(const std::string& id, const DLProgram& p, Fault f) const {
    std::string key = id + "\n" + to_string(p) + "\n" + to_string(p.ontology) + "\n" + std::to_string(static_cast<int>(f));
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
    return dir_ / name.str();
  }
  std::optional<CheckOutcome> get(const std::string& id, const DLProgram& p, Fault f) const {
    std::ifstream in(path(id, p, f));
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return outcome_from_json(j);
  }
  void put(const std::string& id, const DLProgram& p, Fault f, const CheckOutcome& o) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path(id, p, f));
    if (out) out << outcome_json(o).dump() << '\n';
  }

 private:
  fs::path dir_;
  mutable std::mutex mu_;
};

struct Job {
  std::string check;
  std::string instance;
  DLProgram program;
};

int cmd_verify(const Global& g, std::vector<std::string> ids, const std::vector<std::string>& files, std::size_t count,
               const GeneratorConfig& base, const std::string& report_path, bool fault, bool no_shrink) {
  if (ids.empty())
    for (const auto& c : check_table()) ids.push_back(c.id);
  for (const auto& id : ids)
    if (!find_check(id)) throw UsageError("unknown check id " + id);
  VerifyOptions vo;
  vo.eval = eval_options(g);
  vo.enumerate.cap_hb = g.cap_hb;
  vo.extensions.entail.exhaustive_cap = g.cap_atoms;
  vo.fault = fault ? Fault::kTauDropJustifications : Fault::kNone;
  vo.minimise = !no_shrink;

  std::vector<Job> jobs;
  std::vector<CheckOutcome> outcomes;
  std::vector<DLProgram> programs;
  for (const auto& f : files) programs.push_back(load_program(f));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!files.empty()) {
      for (std::size_t k = 0; k < files.size(); ++k) jobs.push_back({ids[i], files[k], programs[k]});
      continue;
    }
    GeneratorConfig cfg = base;
    cfg.seed = g.seed + i;
    Generator gen(cfg);
    std::size_t taken = 0;
    for (std::size_t draws = 0; taken < count && draws < 200 * std::max<std::size_t>(count, 1); ++draws) {
      auto inst = gen.next();
      try {
        ProgramContext ctx(inst.program, vo.eval);
        if (!check_applies(ids[i], ctx)) continue;
      } catch (const ResourceCapExceeded&) {
        continue;
      }
      jobs.push_back({ids[i], inst.id, inst.program});
      ++taken;
    }
  }

  VerdictCache cache;
  outcomes.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      const auto& j = jobs[i];
      if (cache.enabled())
        if (auto hit = cache.get(j.check, j.program, vo.fault)) {
          hit->instance_id = j.instance;
          outcomes[i] = *hit;
          continue;
        }
      outcomes[i] = run_check(j.check, j.program, j.instance, vo);
      if (cache.enabled()) cache.put(j.check, j.program, vo.fault, outcomes[i]);
    }
  };
  std::size_t nw = std::max<std::size_t>(1, g.workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < nw; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json arr = json::array();
  bool failed = false;
  for (const auto& o : outcomes) {
    arr.push_back(outcome_json(o));
    failed |= !o.pass && !o.skipped;
  }
  if (!report_path.empty()) write_text(report_path, arr.dump(2) + "\n");
  if (g.json) {
    std::cout << arr.dump(2) << '\n';
  } else {
    print_report(std::cout, outcomes);
    for (const auto& o : outcomes)
      if (!o.pass && !o.skipped)
        std::cout << "\nFAIL " << o.check_id << " " << o.instance_id << ": " << o.reason << '\n' << o.counterexample;
  }
  return failed ? kCheckFailed : kOk;
}

int cmd_generate(const GeneratorConfig& cfg, std::size_t count, const std::string& out_dir) {
  Generator gen(cfg);
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    auto inst = gen.next();
    std::ostringstream stem;
    stem << "inst_" << std::setw(4) << std::setfill('0') << i;
    std::string prog = "#ontology \"" + stem.str() + ".onto\"\n" + inst.program_text;
    if (out_dir.empty()) {
      std::cout << "% " << inst.id << "\n% " << stem.str() << ".onto\n" << inst.ontology_text << "% " << stem.str()
                << ".dlp\n" << prog;
      continue;
    }
    write_text((fs::path(out_dir) / (stem.str() + ".onto")).string(), inst.ontology_text);
    write_text((fs::path(out_dir) / (stem.str() + ".dlp")).string(), prog);
  }
  return kOk;
}

void add_generator_flags(CLI::App* app, GeneratorConfig& cfg) {
  app->add_option("--max-constants", cfg.max_constants)->capture_default_str();
  app->add_option("--max-predicates", cfg.max_predicates)->capture_default_str();
  app->add_option("--max-concepts", cfg.max_concepts)->capture_default_str();
  app->add_option("--max-rules", cfg.max_rules)->capture_default_str();
  app->add_option("--max-body", cfg.max_body)->capture_default_str();
  app->add_option("--max-inputs", cfg.max_inputs)->capture_default_str();
  app->add_option("--ontology-axioms", cfg.ontology_axiom_budget)->capture_default_str();
  app->add_option("--max-hb", cfg.max_hb)->capture_default_str();
  app->add_flag("--force-constraint", cfg.force_constraint);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dl-program semantics, translations and default logic encodings"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "generator seed")->capture_default_str();
  app.add_option("--cap-hb", g.cap_hb, "largest Herbrand base to enumerate")->capture_default_str();
  app.add_option("--cap-atoms", g.cap_atoms, "largest universe for valuation enumeration")->capture_default_str();
  app.add_option("--workers", g.workers, "parallel verification workers")->capture_default_str();
  app.add_flag("--trace", g.trace, "log candidates to stderr");
  app.add_flag("--explain", g.explain, "show witnesses and reducts");
  app.add_option("--dump-cnf", g.dump_cnf, "write the clause database in DIMACS form");

  std::string in, out, map_path, semantics = "strong", strategy = "supported", pass, target, program_path, report;
  bool oracle = false, fault = false, no_shrink = false;
  std::vector<std::string> ids, files;
  std::size_t count = 100;
  GeneratorConfig gen_cfg;

  auto* parse = app.add_subcommand("parse", "parse and print a program, ontology or default theory");
  parse->add_option("file", in)->required();
  auto* classify = app.add_subcommand("classify", "monotonicity of dl-atoms and program class");
  classify->add_option("file", in)->required();
  auto* answersets = app.add_subcommand("answersets", "enumerate answer sets");
  answersets->add_option("file", in)->required();
  answersets->add_option("--semantics", semantics, "weak|strong|flp|wws|sws")->capture_default_str();
  answersets->add_option("--strategy", strategy, "supported|baseline")->capture_default_str();
  auto* translate_cmd = app.add_subcommand("translate", "rewrite a program");
  translate_cmd->add_option("file", in)->required();
  translate_cmd->add_option("--pass", pass, "pi|pistar|sigma|piprime")->required();
  translate_cmd->add_option("-o,--output", out);
  translate_cmd->add_option("--map", map_path, "symbol map JSON");
  auto* encode_cmd = app.add_subcommand("encode", "compile a program to a default theory");
  encode_cmd->add_option("file", in)->required();
  encode_cmd->add_option("--target", target, "tau|tauprime|taustar|taustarprime")->required();
  encode_cmd->add_option("-o,--output", out);
  auto* extensions = app.add_subcommand("extensions", "list extensions of a default theory");
  extensions->add_option("file", in)->required();
  extensions->add_option("--program", program_path, "project onto the Herbrand base of this program");
  extensions->add_flag("--oracle", oracle, "search generating default subsets instead");
  auto* verify = app.add_subcommand("verify", "run correspondence checks");
  verify->add_option("checks", ids, "check ids (default all)");
  verify->add_option("--files", files, "programs to check instead of generated ones");
  verify->add_option("--count", count, "generated instances per check")->capture_default_str();
  verify->add_option("--report", report, "write JSON report");
  verify->add_flag("--inject-fault", fault, "drop justifications in tau");
  verify->add_flag("--no-shrink", no_shrink, "keep counterexamples unshrunk");
  add_generator_flags(verify, gen_cfg);
  auto* list = app.add_subcommand("checks", "list check ids");
  auto* generate = app.add_subcommand("generate", "write random programs");
  generate->add_option("--count", count)->capture_default_str();
  generate->add_option("--out", out, "output directory");
  add_generator_flags(generate, gen_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(g, in);
    if (*classify) return cmd_classify(g, in);
    if (*answersets) return cmd_answersets(g, in, semantics, strategy);
    if (*translate_cmd) return cmd_translate(g, in, pass, out, map_path);
    if (*encode_cmd) return cmd_encode(g, in, target, out);
    if (*extensions) return cmd_extensions(g, in, program_path, oracle);
    if (*verify) return cmd_verify(g, ids, files, count, gen_cfg, report, fault, no_shrink);
    if (*list) {
      if (g.json) {
        json a = json::array();
        for (const auto& c : check_table())
          a.push_back({{"id", c.id}, {"semantics", c.semantics}, {"translation", c.translation},
                       {"precondition", c.precondition}, {"statement", c.statement}});
        std::cout << a.dump(2) << '\n';
      } else {
        for (const auto& c : check_table())
          std::cout << std::left << std::setw(24) << c.id << c.statement << "  [" << c.precondition << "]\n";
      }
      return kOk;
    }
    if (*generate) {
      gen_cfg.seed = g.seed;
      return cmd_generate(gen_cfg, count, out);
    }
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << in << ":" << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const EncodingError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
