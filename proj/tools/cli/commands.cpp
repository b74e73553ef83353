#include "cli/commands.hpp"

#include <cospec/blowup.hpp>
#include <cospec/errors.hpp>
#include <cospec/linalg.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace cospec::cli {

Method parse_method(const std::string& name) {
  if (name == "exact") return Method::Exact;
  if (name == "transfer") return Method::Transfer;
  if (name == "oracle") return Method::Oracle;
  if (name == "all") return Method::All;
  throw ParameterError("unknown method '" + name + "' (expected exact|transfer|oracle|all)");
}

std::vector<Rational> default_scan_k() { return {Rational(1), Rational(2), Rational(1, 2)}; }

int exit_code_for(const Error& err) {
  if (dynamic_cast<const BudgetError*>(&err)) return kBudgetExceeded;
  if (dynamic_cast<const LengthError*>(&err) || dynamic_cast<const AlphabetError*>(&err) ||
      dynamic_cast<const ParameterError*>(&err) || dynamic_cast<const FormatError*>(&err) ||
      dynamic_cast<const PoleError*>(&err) || dynamic_cast<const ShapeError*>(&err))
    return kUsageError;
  return kCheckFailed;
}

Json error_report(const Error& err) {
  return Json{{"error", {{"kind", err.kind()}, {"message", err.what()}}}};
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects named boolean checks for the report and stderr summary.
class CheckList {
 public:
  void add(const std::string& name, bool passed, const std::string& context = {}) {
    checks_.push_back({{"check", name}, {"passed", passed}});
    summary_ << (passed ? "PASS " : "FAIL ") << (context.empty() ? "" : context + " ") << name
             << "\n";
    all_ &= passed;
  }
  bool all_passed() const { return all_; }
  Json json() const { return checks_; }
  std::string summary() const { return summary_.str(); }

 private:
  Json checks_ = Json::array();
  std::ostringstream summary_;
  bool all_ = true;
};

const std::vector<Rational>& require_k(const RunConfig& cfg) {
  if (cfg.k_values.empty()) throw ParameterError("at least one k value is required");
  for (const auto& k : cfg.k_values)
    if (k <= 0) throw ParameterError("k must be positive, got " + to_pretty(k));
  return cfg.k_values;
}

bool charpoly_shape_ok(const Polynomial& p, std::size_t n) {
  return p.degree() == static_cast<int>(n) && p.is_monic() &&
         p.coeff(n - 1) == -static_cast<long>(n) && p.coeff(0) == 0 && p.coeff(1) != 0;
}

struct PairOutcome {
  Json report;
  bool passed = true;
  std::string summary;
};

PairOutcome verify_pair(const Word& w, const Rational& k, const RunConfig& cfg,
                        bool soft_budget) {
  const auto start = Clock::now();
  const Word wt = toggle(w);
  const RingGraph a = assemble_ring(w, k);
  const RingGraph b = assemble_ring(wt, k);
  const std::string ctx = w.str() + "/" + wt.str() + " k=" + to_pretty(k);
  CheckList checks;
  Json report;
  report["word"] = w.str();
  report["toggled"] = wt.str();
  report["k"] = to_string(k);
  report["n"] = a.graph.n();
  report["edges"] = {a.graph.edge_count(), b.graph.edge_count()};
  report["edge_delta"] = static_cast<long>(b.graph.edge_count()) - static_cast<long>(a.graph.edge_count());
  report["subgraph"] = {{"word_in_toggled", subgraph_after_symmetry(a, b)},
                        {"toggled_in_word", subgraph_after_symmetry(b, a)}};

  const Polynomial pa = charpoly_exact(a.graph);
  const Polynomial pb = charpoly_exact(b.graph);
  report["charpoly_exact"] = to_json(pa);
  checks.add("exact_charpoly_equal", pa == pb, ctx);
  checks.add("charpoly_shape", charpoly_shape_ok(pa, a.graph.n()) && charpoly_shape_ok(pb, b.graph.n()),
             ctx);
  checks.add("random_walk_charpoly_equal",
             charpoly_random_walk(a.graph) == charpoly_random_walk(b.graph), ctx);

  if (cfg.method == Method::Transfer || cfg.method == Method::All) {
    const Polynomial ta = charpoly_via_transfer(w, k);
    const Polynomial tb = charpoly_via_transfer(wt, k);
    report["charpoly_transfer"] = to_json(ta);
    checks.add("transfer_equals_exact", ta == pa && tb == pb, ctx);
    checks.add("transfer_toggle_equal", ta == tb, ctx);
    checks.add("short_part_via_Y", short_part(w, k) == short_part_via_Y(w, k), ctx);
  }

  if (cfg.method == Method::Oracle || cfg.method == Method::All) {
    const EnumerationBudget budget{cfg.oracle_max_vertices, cfg.budget};
    try {
      const DecompositionAnalysis oa = analyze_decompositions(a, budget);
      const DecompositionAnalysis ob = analyze_decompositions(b, budget);
      report["oracle"] = {{"word", to_json(oa)}, {"toggled", to_json(ob)}};
      checks.add("oracle_equals_exact", oa.charpoly == pa && ob.charpoly == pb, ctx);
      checks.add("long_part_closed_form",
                 oa.long_part == long_part_closed_form(w.tau(), w.ell(), w.m(), k) &&
                     ob.long_part == long_part_closed_form(wt.tau(), wt.ell(), wt.m(), k),
                 ctx);
    } catch (const BudgetError& err) {
      if (!soft_budget && cfg.method == Method::Oracle) throw;
      report["oracle"] = {{"status", "skipped"}, {"reason", err.what()}};
    }
  }

  const std::vector<double> ea = eigenvalues_numeric(a.graph);
  const std::vector<double> eb = eigenvalues_numeric(b.graph);
  const double gap = spectrum_distance(ea, eb);
  report["eigenvalues"] = {{"word", ea}, {"toggled", eb}};
  report["max_eigenvalue_gap"] = gap;
  checks.add("eigenvalues_agree", gap <= cfg.tol, ctx);
  const bool in_range = std::all_of(ea.begin(), ea.end(), [&](double x) {
    return x >= -cfg.tol && x <= 2 + cfg.tol;
  });
  checks.add("eigenvalues_in_range", in_range, ctx);

  report["checks"] = checks.json();
  report["passed"] = checks.all_passed();
  report["timing_ms"] = elapsed_ms(start);
  return {std::move(report), checks.all_passed(), checks.summary()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

std::string extension(ExportFormat f) {
  switch (f) {
    case ExportFormat::Dot: return "dot";
    case ExportFormat::Json: return "json";
    case ExportFormat::Csv: return "csv";
  }
  return "txt";
}

}  // namespace

Json transfer_report(const Word& w, const Rational& k) {
  const RingGraph g = assemble_ring(w, k);
  const Polynomial exact = charpoly_exact(g.graph);
  const Polynomial longp = long_part_closed_form(w.tau(), w.ell(), w.m(), k);
  const Polynomial shortp = short_part(w, k);
  const Polynomial toggled = charpoly_via_transfer(toggle(w), k);
  bool conj = true;
  for (int t : {3, 4, 5}) conj &= check_u_conjugation(k, t).identities_hold();
  Json j;
  j["word"] = w.str();
  j["k"] = to_string(k);
  j["charpoly_exact"] = to_json(exact);
  j["long_part"] = to_json(longp);
  j["short_part"] = to_json(shortp);
  j["transfer_equals_exact"] = longp + shortp == exact;
  j["toggle_equals"] = toggled == longp + shortp;
  j["u_conjugation"] = conj;
  return j;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word);
  CommandResult result;
  Json runs = Json::array();
  bool all = true;
  for (const auto& k : require_k(cfg)) {
    PairOutcome o = verify_pair(w, k, cfg, false);
    o.report["transfer_report"] = transfer_report(w, k);
    all &= o.passed && o.report["transfer_report"]["transfer_equals_exact"].get<bool>() &&
           o.report["transfer_report"]["toggle_equals"].get<bool>() &&
           o.report["transfer_report"]["u_conjugation"].get<bool>();
    result.summary += o.summary;
    runs.push_back(std::move(o.report));
  }
  result.report = {{"command", "verify"}, {"results", std::move(runs)}, {"passed", all}};
  result.exit_code = all ? kPass : kCheckFailed;
  return result;
}

CommandResult cmd_scan(const RunConfig& cfg) {
  if (cfg.tau_max < 3 || cfg.tau_max > cfg.tau_cap)
    throw ParameterError("tau-max must lie in [3, " + std::to_string(cfg.tau_cap) + "]");
  const auto& ks = require_k(cfg);

  struct Item {
    Word word;
    Rational k;
  };
  std::vector<Item> items;
  std::size_t word_count = 0;
  for (std::size_t tau = 3; tau <= cfg.tau_max; ++tau)
    for (const Word& w : canonical_words(tau)) {
      ++word_count;
      for (const auto& k : ks) items.push_back({w, k});
    }

  // Bounded worker pool; results land in their item slot so the report
  // order does not depend on scheduling.
  std::vector<PairOutcome> outcomes(items.size());
  std::vector<std::string> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        outcomes[i] = verify_pair(items[i].word, items[i].k, cfg, true);
      } catch (const Error& err) {
        errors[i] = err.kind() + ": " + err.what();
      }
    }
  };
  std::size_t workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, items.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  CommandResult result;
  Json entries = Json::array();
  std::map<long, std::size_t> deltas;
  Json subgraph_hits = Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0, oracle_skipped = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!errors[i].empty()) {
      ++skipped;
      entries.push_back({{"word", items[i].word.str()},
                         {"k", to_string(items[i].k)},
                         {"status", "skipped"},
                         {"reason", errors[i]}});
      continue;
    }
    PairOutcome& o = outcomes[i];
    o.passed ? ++passed : ++failed;
    if (o.report.contains("oracle") && o.report["oracle"].contains("status")) ++oracle_skipped;
    result.summary += o.summary;
    ++deltas[o.report["edge_delta"].get<long>()];
    if (o.report["subgraph"]["word_in_toggled"].get<bool>() ||
        o.report["subgraph"]["toggled_in_word"].get<bool>())
      subgraph_hits.push_back({{"word", items[i].word.str()}, {"k", to_string(items[i].k)},
                               {"word_in_toggled", o.report["subgraph"]["word_in_toggled"]},
                               {"toggled_in_word", o.report["subgraph"]["toggled_in_word"]}});
    o.report.erase("eigenvalues");
    o.report.erase("oracle");
    entries.push_back(std::move(o.report));
  }
  Json delta_json = Json::object();
  for (const auto& [d, c] : deltas) delta_json[std::to_string(d)] = c;
  Json k_json = Json::array();
  for (const auto& k : ks) k_json.push_back(to_string(k));
  result.report = {{"command", "scan"},
                   {"tau_max", cfg.tau_max},
                   {"k", k_json},
                   {"canonical_words", word_count},
                   {"pairs_checked", passed + failed},
                   {"passed_count", passed},
                   {"failed_count", failed},
                   {"skipped_count", skipped},
                   {"oracle_skipped_count", oracle_skipped},
                   {"edge_deltas", delta_json},
                   {"subgraph_hits", subgraph_hits},
                   {"entries", entries},
                   {"passed", failed == 0}};
  result.summary += "scan: " + std::to_string(word_count) + " canonical words, " +
                    std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " +
                    std::to_string(skipped) + " skipped, oracle over budget on " +
                    std::to_string(oracle_skipped) + "\n";
  result.exit_code = failed == 0 ? kPass : kCheckFailed;
  return result;
}

namespace {

Json blowup_side_json(const BlowupResult& r, ExportFormat format, std::string* text_out) {
  Json spec;
  Json mult = Json::object();
  for (std::size_t v = 0; v < r.spec.multiplicity.size(); ++v)
    if (r.spec.multiplicity[v] != 1) mult[r.source.graph.label(int(v))] = r.spec.multiplicity[v];
  spec["multiplicities"] = mult;
  Json splits = Json::array();
  for (const auto& chain : r.spec.path_splits) {
    Json labels = Json::array();
    for (int v : chain) labels.push_back(r.source.graph.label(v));
    splits.push_back(labels);
  }
  spec["path_splits"] = splits;

  std::string text = export_graph(r.blown, format,
                                  ExportMetadata{r.source.word.str(), r.source.k});
  if (format == ExportFormat::Json) {
    Json g = Json::parse(text);
    g["blowup"] = spec;
    text = g.dump() + "\n";
  }
  *text_out = text;

  Json j;
  j["word"] = r.source.word.str();
  j["source_n"] = r.source.graph.n();
  j["n"] = r.blown.n();
  j["edges"] = r.blown.edge_count();
  j["simple"] = is_simple(r.blown);
  j["blowup"] = spec;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace

CommandResult cmd_blowup(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word);
  const Rational k = require_k(cfg).front();
  const BlowupPair pair = scaled_blowup_pair(w, k, cfg.scale);
  CheckList checks;
  const std::string ctx = w.str() + " k=" + to_pretty(k) + " scale=" + to_pretty(cfg.scale);

  std::string text_a, text_b;
  Json ja = blowup_side_json(pair.first, cfg.format, &text_a);
  Json jb = blowup_side_json(pair.second, cfg.format, &text_b);
  checks.add("first_simple", is_simple(pair.first.blown), ctx);
  checks.add("second_simple", is_simple(pair.second.blown), ctx);

  const auto ea = eigenvalues_numeric(pair.first.blown);
  const auto eb = eigenvalues_numeric(pair.second.blown);
  const double gap = spectrum_distance(ea, eb);
  checks.add("blowups_cospectral", gap <= cfg.tol, ctx);

  // Pure independent-set blowups keep the source spectrum and add 1s.
  for (const BlowupResult* r : {&pair.first, &pair.second}) {
    if (!r->spec.path_splits.empty()) continue;
    std::vector<double> expected = eigenvalues_numeric(r->source.graph);
    expected.resize(r->blown.n(), 1.0);
    std::sort(expected.begin(), expected.end());
    const auto actual = eigenvalues_numeric(r->blown);
    checks.add("spectrum_containment[" + r->source.word.str() + "]",
               spectrum_distance(expected, actual) <= cfg.tol, ctx);
  }

  CommandResult result;
  result.report = {{"command", "blowup"},
                   {"word", w.str()},
                   {"k", to_string(k)},
                   {"scale", to_string(cfg.scale)},
                   {"first", ja},
                   {"second", jb},
                   {"max_eigenvalue_gap", gap},
                   {"checks", checks.json()},
                   {"passed", checks.all_passed()}};
  if (cfg.out) {
    std::error_code ec;
    std::filesystem::create_directories(*cfg.out, ec);
    if (ec) throw FormatError("cannot create directory '" + *cfg.out + "': " + ec.message());
    const std::string ext = extension(cfg.format);
    const std::string pa = *cfg.out + "/" + pair.first.source.word.str() + "_blowup." + ext;
    const std::string pb = *cfg.out + "/" + pair.second.source.word.str() + "_blowup." + ext;
    write_file(pa, text_a);
    write_file(pb, text_b);
    result.report["files"] = {pa, pb};
  } else {
    result.report["graphs"] = {text_a, text_b};
  }
  for (const auto* r : {&pair.first, &pair.second})
    for (const auto& warn : r->warnings) result.summary += "WARN " + r->source.word.str() + ": " + warn + "\n";
  result.summary += checks.summary();
  result.exit_code = checks.all_passed() ? kPass : kCheckFailed;
  return result;
}

CommandResult cmd_identities(const RunConfig& cfg) {
  if (cfg.t_values.empty()) throw ParameterError("at least one t value is required");
  CheckList checks;
  Json points = Json::array();
  for (const auto& k : require_k(cfg))
    for (const auto& t : cfg.t_values) {
      const std::string ctx = "k=" + to_pretty(k) + " t=" + to_pretty(t);
      Json p;
      try {
        const TransferEvaluation ev = build_transfer(k, t);
        checks.add("Q = R S R^-1", true, ctx);
        checks.add("lower-right blocks vanish", true, ctx);
        ConjugationReport rep = verify_U_conjugation(k, t);
        for (const auto& c : rep.checks) checks.add(c.name, c.passed, ctx);
        p = to_json(rep);
        p["Y_P"] = format_matrix(ev.Y_P);
        p["Y_C"] = format_matrix(ev.Y_C);
        p["Y_E"] = format_matrix(ev.Y_E);
      } catch (const IdentityError& err) {
        checks.add("identities", false, ctx);
        p = {{"k", to_string(k)}, {"t", to_string(t)}, {"error", err.what()}};
      }
      points.push_back(std::move(p));
    }
  CommandResult result;
  result.report = {{"command", "identities"},
                   {"points", points},
                   {"checks", checks.json()},
                   {"passed", checks.all_passed()}};
  result.summary = checks.summary();
  result.exit_code = checks.all_passed() ? kPass : kCheckFailed;
  return result;
}

CommandResult cmd_export(const RunConfig& cfg) {
  const RingGraph g = assemble_ring(parse_word(cfg.word), require_k(cfg).front());
  CommandResult result;
  result.text = export_graph(g, cfg.format);
  if (cfg.out) write_file(*cfg.out, result.text);
  result.summary = "exported G(" + g.word.str() + ") with " + std::to_string(g.graph.n()) +
                   " vertices and " + std::to_string(g.graph.edge_count()) + " edges\n";
  return result;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word);
  Json runs = Json::array();
  for (const auto& k : require_k(cfg)) {
    const RingGraph g = assemble_ring(w, k);
    runs.push_back({{"word", w.str()},
                    {"k", to_string(k)},
                    {"n", g.graph.n()},
                    {"eigenvalues", eigenvalues_numeric(g.graph)}});
  }
  CommandResult result;
  result.report = {{"command", "spectrum"}, {"results", runs}};
  return result;
}

CommandResult cmd_charpoly(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word);
  CheckList checks;
  Json runs = Json::array();
  for (const auto& k : require_k(cfg)) {
    const RingGraph g = assemble_ring(w, k);
    const std::string ctx = w.str() + " k=" + to_pretty(k);
    Json j{{"word", w.str()}, {"k", to_string(k)}, {"n", g.graph.n()}};
    const Polynomial exact = charpoly_exact(g.graph);
    if (cfg.method == Method::Exact || cfg.method == Method::All) j["exact"] = to_json(exact);
    if (cfg.method == Method::Transfer || cfg.method == Method::All) {
      const Polynomial tr = charpoly_via_transfer(w, k);
      j["transfer"] = to_json(tr);
      checks.add("transfer_equals_exact", tr == exact, ctx);
    }
    if (cfg.method == Method::Oracle || cfg.method == Method::All) {
      const EnumerationBudget budget{cfg.oracle_max_vertices, cfg.budget};
      const Polynomial orc = charpoly_via_decompositions(g.graph, budget);
      j["oracle"] = to_json(orc);
      checks.add("oracle_equals_exact", orc == exact, ctx);
    }
    j["pretty"] = exact.to_string();
    runs.push_back(std::move(j));
  }
  CommandResult result;
  result.report = {{"command", "charpoly"}, {"results", runs}, {"passed", checks.all_passed()}};
  result.summary = checks.summary();
  result.exit_code = checks.all_passed() ? kPass : kCheckFailed;
  return result;
}

}  // namespace cospec::cli
