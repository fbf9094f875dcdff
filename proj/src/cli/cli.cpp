#include "qha/cli/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "qha/homology/tor.hpp"
#include "qha/modcat/module_file.hpp"
#include "report.hpp"

namespace qha::cli {

namespace {

struct Session {
  Json inputs = Json::object();
  Json result = Json::object();
  Json verdicts = Json::object();
  std::string summary;

  std::string read(const std::string& role, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    inputs[role] = {{"path", path}, {"fnv1a", fnv1a_hex(text)}};
    return text;
  }

  AlgebraPtr algebra(const std::string& path, Presentation* keep = nullptr) {
    Presentation p = parse_presentation(read("algebra", path), std::filesystem::path(path).stem().string());
    if (keep) *keep = p;
    return build_algebra(p);
  }
};

struct CapOptions {
  std::optional<std::size_t> max_dim;
  std::optional<std::size_t> max_iter;

  [[nodiscard]] Caps caps() const {
    Caps c = Caps::from_env();
    if (max_dim) c.max_dim = *max_dim;
    if (max_iter) c.max_iter = *max_iter;
    return c;
  }
};

void add_cap_options(CLI::App* sub, CapOptions& o) {
  sub->add_option("--max-dim", o.max_dim, "largest module dimension during reflection")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", o.max_iter, "largest number of reflection steps")->check(CLI::PositiveNumber);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

int vertex_token(const std::string& tok, int n) {
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw ParseError("bad vertex '" + tok + "'");
  }
  if (v < 1 || v > n) throw ValidationError("UnknownVertex", "no vertex " + tok);
  return v - 1;
}

// "P<k>", "S<k>" or a module file.
Representation module_token(Session& s, const std::string& role, const std::string& tok, const AlgebraPtr& a,
                            bool right) {
  static const std::regex named("([PS])([0-9]+)");
  AlgebraPtr over = right ? a->opposite() : a;
  std::smatch m;
  if (std::regex_match(tok, m, named)) {
    int v = vertex_token(m[2].str(), a->vertex_count());
    return m[1].str() == "P" ? projective(over, v) : simple(over, v);
  }
  NamedModule nm = parse_module(s.read(role, tok), a);
  if (nm.right != right)
    throw ValidationError("ModuleSide", "'" + tok + "' is a " + (nm.right ? "right" : "left") + " module; expected a " +
                                            (right ? "right" : "left") + " module");
  return nm.rep;
}

void cmd_check(Session& s, const std::string& path) {
  Presentation p;
  AlgebraPtr a = s.algebra(path, &p);
  Json arrows = Json::array();
  for (const auto& ar : p.quiver.arrows)
    arrows.push_back({{"name", ar.name}, {"source", ar.source + 1}, {"target", ar.target + 1}});
  Json relations = Json::array();
  for (const auto& r : p.relations) relations.push_back(lincomb_str(p.quiver, r));
  Json basis = Json::array();
  for (const auto& w : a->basis()) basis.push_back(path_name(p.quiver, w));
  Json proj = Json::array();
  for (int i = 0; i < a->vertex_count(); ++i) proj.push_back(projective(a, i).total_dim());

  AlgebraPtr again = build_algebra(parse_presentation(serialize_presentation(p), p.name));
  bool round_trip = again->dim() == a->dim() && again->algebra() == a->algebra();
  for (std::size_t k = 0; round_trip && k < a->dim(); ++k)
    round_trip = path_name(p.quiver, a->basis()[k]) == path_name(again->quiver(), again->basis()[k]);

  s.result["name"] = p.name;
  s.result["field"] = p.field.name();
  s.result["vertices"] = a->vertex_count();
  s.result["arrows"] = arrows;
  s.result["relations"] = relations;
  s.result["dimension"] = a->dim();
  s.result["basis"] = basis;
  s.result["projective_dims"] = proj;
  s.result["round_trip"] = round_trip;
  s.verdicts["round_trip"] = round_trip;
  s.summary = "check: " + p.name + " has dimension " + std::to_string(a->dim());
}

RingEpi localise(Session& s, const AlgebraPtr& a, const std::string& sigma, const std::string& modules,
                 const Caps& caps) {
  if (!sigma.empty()) {
    auto maps = parse_sigma(s.read("sigma", sigma), a);
    s.result["sigma"] = sigma_json(maps, *a);
    return universal_localise(a, maps, caps);
  }
  std::vector<Representation> mods;
  auto toks = split_list(modules);
  for (std::size_t k = 0; k < toks.size(); ++k)
    mods.push_back(module_token(s, "module" + std::to_string(k + 1), toks[k], a, false));
  RingEpi f = localise_at_modules(a, mods, caps);
  s.result["sigma"] = sigma_json(f.sigma, *a);
  return f;
}

void cmd_localize(Session& s, const std::string& path, const std::string& sigma, const std::string& modules,
                  const Caps& caps) {
  AlgebraPtr a = s.algebra(path);
  RingEpi f = localise(s, a, sigma, modules, caps);
  EpiFlags flags = classify(f, caps);
  s.result["epi"] = epi_json(f);
  s.result["b"] = algebra_json(f.b);
  s.result["flags"] = flags_json(flags);
  s.verdicts["ring_epimorphism"] = flags.is_epi;
  s.verdicts["finite"] = flags.finite;
  s.verdicts["homological"] = verdict_name(flags.homological);
  s.summary = "localize: dim B = " + std::to_string(f.b.dim()) + ", homological " + verdict_name(flags.homological);
}

void cmd_epi(Session& s, const std::string& path, const std::string& vertices, const Caps& caps) {
  AlgebraPtr a = s.algebra(path);
  std::vector<int> vs;
  for (const auto& t : split_list(vertices)) vs.push_back(vertex_token(t, a->vertex_count()));
  QuotientAndCorner qc = quotient_and_corner(a, vs);
  EpiFlags flags = classify(qc.quotient, caps);
  Json v = Json::array();
  for (int x : vs) v.push_back(x + 1);
  s.result["vertices"] = v;
  s.result["quotient"] = epi_json(qc.quotient);
  s.result["flags"] = flags_json(flags);
  s.result["corner"] = algebra_json(qc.corner);
  s.verdicts["stratifying"] = verdict_name(flags.homological);
  s.summary = "epi: dim A/AeA = " + std::to_string(qc.quotient.b.dim()) + ", dim eAe = " +
              std::to_string(qc.corner.dim()) + ", stratifying " + verdict_name(flags.homological);
}

void cmd_tor(Session& s, const std::string& path, const std::string& right, const std::string& left,
             std::size_t degree, const Caps& caps) {
  AlgebraPtr a = s.algebra(path);
  Representation m = module_token(s, "right", right, a, true);
  Representation n = module_token(s, "left", left, a, false);
  std::size_t d = tor(m, n, degree, std::max<std::size_t>(caps.resolution_cap, 32));
  s.result["degree"] = degree;
  s.result["dim"] = d;
  s.summary = "tor: dim Tor_" + std::to_string(degree) + " = " + std::to_string(d);
}

void cmd_recollement(Session& s, const std::string& path, const std::string& sigma, const std::string& modules,
                     const Caps& caps) {
  AlgebraPtr a = s.algebra(path);
  RingEpi f = localise(s, a, sigma, modules, caps);
  RecollementReport r = build_recollement(f, caps, Provenance::user_sigma, sigma.empty() ? modules : sigma);
  s.result["recollement"] = recollement_json(r);
  s.result["certificate"] = certificate_json(certify_universal_localisation(f, caps));
  s.verdicts["recollement"] = r.verdict();
  s.verdicts["failed"] = r.failed;
  std::string failed;
  for (const auto& x : r.failed) failed += (failed.empty() ? "" : ",") + x;
  s.summary = std::string("recollement: ") + r.verdict() + (failed.empty() ? "" : "{" + failed + "}") +
              (r.end ? ", dim E = " + std::to_string(r.end->ring.dim()) : "");
}

void cmd_scan(Session& s, const std::string& path, bool arrows, bool stratifying, std::size_t tor_cap,
              const Caps& caps) {
  AlgebraPtr a = s.algebra(path);
  if (!arrows && !stratifying) arrows = stratifying = true;
  Json witness = {{"found", false}};
  auto take = [&](const RecollementReport& r) {
    if (witness["found"] || !r.nontrivial()) return;
    witness = {{"found", true},
               {"provenance", provenance_name(r.provenance)},
               {"label", r.label},
               {"left_dim", r.f.b.dim()},
               {"right_dim", r.end->ring.dim()}};
  };
  if (arrows) {
    Json conds = Json::array();
    for (std::size_t k = 0; k < a->quiver().arrows.size(); ++k) {
      ArrowConditions c = arrow_conditions(a, static_cast<int>(k));
      conds.push_back({{"arrow", a->quiver().arrows[k].name},
                       {"unique_from_source", c.unique_from_source},
                       {"unique_into_target", c.unique_into_target},
                       {"no_relation_at_target", c.no_relation_at_target}});
    }
    Json found = Json::array();
    for (const auto& x : scan_arrows(a, caps)) {
      found.push_back(arrow_scan_json(x, *a));
      take(x.report);
    }
    s.result["arrow_conditions"] = conds;
    s.result["arrows"] = found;
  }
  if (stratifying) {
    Json found = Json::array();
    for (const auto& x : scan_stratifying(a, tor_cap, caps)) {
      found.push_back(idempotent_scan_json(x));
      if (x.report) take(*x.report);
    }
    s.result["tor_cap"] = tor_cap;
    s.result["stratifying"] = found;
  }
  if (!witness["found"]) witness["note"] = "no witness found by implemented searches";
  s.result["witness"] = witness;
  s.verdicts["not_derived_simple"] = witness["found"];
  s.summary = witness["found"] ? "scan: witness via " + witness["provenance"].get<std::string>() + " " +
                                     witness["label"].get<std::string>()
                               : "scan: no witness found by implemented searches";
}

void cmd_corpus_run(Session& s, const std::string& dir) {
  const std::string manifest = dir + "/regressions.json";
  Json cases;
  try {
    cases = Json::parse(s.read("manifest", manifest));
  } catch (const Json::parse_error& e) {
    throw ParseError(manifest + ": " + e.what());
  }
  Json results = Json::array();
  std::size_t passed = 0;
  for (const auto& c : cases) {
    std::vector<std::string> args;
    for (const auto& a : c.at("args")) {
      std::string arg = a.get<std::string>();
      if (auto p = arg.find("{corpus}"); p != std::string::npos) arg.replace(p, 8, dir);
      args.push_back(arg);
    }
    std::ostringstream out, err;
    const int code = run(args, out, err);
    Json report = Json::parse(out.str());
    Json mismatches = Json::array();
    const int want = c.value("exit", 0);
    if (code != want) mismatches.push_back({{"pointer", "exit"}, {"expected", want}, {"actual", code}});
    const Json expect = c.value("expect", Json::object());
    for (const auto& [ptr, expected] : expect.items()) {
      Json::json_pointer jp(ptr);
      Json actual = report.contains(jp) ? report.at(jp) : Json(nullptr);
      if (actual != expected) mismatches.push_back({{"pointer", ptr}, {"expected", expected}, {"actual", actual}});
    }
    const bool ok = mismatches.empty();
    passed += ok ? 1 : 0;
    results.push_back({{"name", c.at("name")}, {"exit", code}, {"passed", ok}, {"mismatches", mismatches}});
  }
  s.result["cases"] = results;
  s.result["passed"] = passed;
  s.result["total"] = results.size();
  s.verdicts["all_passed"] = passed == results.size();
  s.summary = "corpus run: " + std::to_string(passed) + "/" + std::to_string(results.size()) + " regressions passed";
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string default_corpus_dir() {
#ifdef QHA_DEFAULT_CORPUS_DIR
  return QHA_DEFAULT_CORPUS_DIR;
#else
  return "corpus";
#endif
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Session s;
  Json report;
  report["command"] = args;
  int code = computed;

  CLI::App app{"qha: quiver algebras, universal localisations and recollements"};
  app.require_subcommand(1);
  std::string algebra, sigma, modules, vertices, right, left, dir = default_corpus_dir();
  std::size_t degree = 0, tor_cap = 8;
  bool arrows = false, stratifying = false;
  CapOptions caps;

  auto* check = app.add_subcommand("check", "build an algebra and list its basis");
  check->add_option("algebra", algebra, "algebra file")->required();

  auto* localize = app.add_subcommand("localize", "universal localisation and its classification");
  localize->add_option("algebra", algebra, "algebra file")->required();
  auto* source = localize->add_option_group("source", "what to invert");
  source->add_option("--sigma", sigma, "file of maps between projectives");
  source->add_option("--at-modules", modules, "comma-separated modules: P<k>, S<k> or module files");
  source->require_option(1);
  add_cap_options(localize, caps);

  auto* epi = app.add_subcommand("epi", "the epimorphism A → A/AeA and the corner eAe");
  epi->add_option("algebra", algebra, "algebra file")->required();
  epi->add_option("--quotient", vertices, "comma-separated vertices of e")->required();

  auto* tor_cmd = app.add_subcommand("tor", "dimension of Tor_i(M, N)");
  tor_cmd->add_option("algebra", algebra, "algebra file")->required();
  tor_cmd->add_option("--right", right, "right module: P<k>, S<k> or a module file over A^op")->required();
  tor_cmd->add_option("--left", left, "left module: P<k>, S<k> or a module file")->required();
  tor_cmd->add_option("--degree", degree, "homological degree")->required();

  auto* rec = app.add_subcommand("recollement", "recollement induced by a universal localisation");
  rec->add_option("algebra", algebra, "algebra file")->required();
  auto* rsource = rec->add_option_group("source", "what to invert");
  rsource->add_option("--sigma", sigma, "file of maps between projectives");
  rsource->add_option("--at-modules", modules, "comma-separated modules: P<k>, S<k> or module files");
  rsource->require_option(1);
  add_cap_options(rec, caps);

  auto* scan = app.add_subcommand("scan", "search for recollements from arrows and idempotents");
  scan->add_option("algebra", algebra, "algebra file")->required();
  scan->add_flag("--arrows", arrows, "scan arrows");
  scan->add_flag("--stratifying", stratifying, "scan idempotent ideals");
  scan->add_option("--tor-cap", tor_cap, "highest Tor degree tried when pd is not found")->check(CLI::PositiveNumber);
  add_cap_options(scan, caps);

  auto* corpus = app.add_subcommand("corpus", "regression corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "run every regression in the corpus manifest");
  corpus_run->add_option("--dir", dir, "corpus directory");

  std::vector<std::string> argv_store{"qha"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  auto fail = [&](int exit, const std::string& kind, const std::string& reason, const std::string& message) {
    code = exit;
    report["error"] = {{"kind", kind}, {"reason", reason}, {"message", message}};
    s.summary = "error (" + reason + "): " + message;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const Caps c = caps.caps();
    if (check->parsed())
      cmd_check(s, algebra);
    else if (localize->parsed())
      cmd_localize(s, algebra, sigma, modules, c);
    else if (epi->parsed())
      cmd_epi(s, algebra, vertices, c);
    else if (tor_cmd->parsed())
      cmd_tor(s, algebra, right, left, degree, c);
    else if (rec->parsed())
      cmd_recollement(s, algebra, sigma, modules, c);
    else if (scan->parsed())
      cmd_scan(s, algebra, arrows, stratifying, tor_cap, c);
    else if (corpus_run->parsed())
      cmd_corpus_run(s, dir);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return computed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return computed;
  } catch (const CLI::ParseError& e) {
    fail(invalid_input, "UsageError", "UsageError", e.what());
  } catch (const ReflectionCapExceeded& e) {
    fail(cap_exceeded, "CapExceeded", e.reason(), e.what());
    report["error"]["history"] = e.history();
    bool monotone = true;
    for (std::size_t k = 1; k < e.history().size(); ++k) monotone = monotone && e.history()[k - 1] <= e.history()[k];
    report["error"]["monotone"] = monotone;
  } catch (const CapExceeded& e) {
    fail(cap_exceeded, "CapExceeded", e.reason(), e.what());
  } catch (const ParseError& e) {
    fail(invalid_input, "ParseError", e.reason(), e.what());
  } catch (const ValidationError& e) {
    fail(invalid_input, "ValidationError", e.reason(), e.what());
  } catch (const HypothesisError& e) {
    fail(invalid_input, "HypothesisError", e.reason(), e.what());
  } catch (const std::exception& e) {
    fail(internal_error, "InternalError", "InternalError", e.what());
  }

  report["inputs"] = s.inputs;
  if (code == computed) {
    report["result"] = s.result;
    report["verdicts"] = s.verdicts;
  }
  report["exit"] = code;
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timings"] = {{"total_ms", ms}};
  out << report.dump(2) << '\n';
  err << s.summary << '\n';
  return code;
}

}  // namespace qha::cli
