#include "chargelab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chargelab/charge.hpp"
#include "chargelab/errors.hpp"
#include "chargelab/macdonald.hpp"
#include "chargelab/paths.hpp"
#include "chargelab/qbg.hpp"
#include "chargelab/serialize.hpp"
#include "chargelab/verify.hpp"

namespace chargelab {

namespace {

struct VerificationFailed {
  std::string message;
};

struct Config {
  std::string type = "A";
  std::optional<int> n;
  std::string mu;
  std::string format = "text";
  std::string method = "both";
  bool trace = false;
  std::string scope = "all";
  int jobs = 1;

  // fill
  std::string w;
  std::string J;
  // fill --inverse, charge
  std::string filling;
  std::string filling_file;
  bool split = false;
  // split
  std::string column;
  // maxcol
  std::string a, b;
  // poly
  bool decompose = false;
  // verify
  std::optional<int> size;
  bool inject_fault = false;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string inline_column(const Column& c) {
  std::vector<int> v;
  for (Letter x : c) v.push_back(x.value());
  return join(v);
}

std::string inline_filling(const Filling& f) {
  std::string s;
  for (std::size_t j = 0; j < f.columns.size(); ++j) s += (j ? "/" : "") + inline_column(f.columns[j]);
  return s;
}

class Session {
 public:
  Session(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  bool json() const { return cfg_.format == "json"; }

  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (cfg_.format == f) return;
    throw ValidationError("format", "format '" + cfg_.format + "' is not available for this command");
  }

  int require_n() const {
    if (!cfg_.n) throw ValidationError("missing-option", "--n is required for this command");
    return *cfg_.n;
  }

  LieType type() const { return parse_lie_type(cfg_.type, require_n()); }

  Weight mu(const LieType& type) const {
    if (cfg_.mu.empty()) throw ValidationError("missing-option", "--mu is required for this command");
    return dominant_weight(type, parse_int_list(cfg_.mu));
  }

  void emit(const Json& doc) const { out_ << doc.dump(2) << "\n"; }

  // Inline "a,b/c,d" (columns left to right) or a JSON document.
  Filling load_filling() const {
    std::string text = cfg_.filling;
    if (!cfg_.filling_file.empty()) {
      std::ifstream in(cfg_.filling_file);
      if (!in) throw ValidationError("io", "cannot read " + cfg_.filling_file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    if (text.empty()) throw ValidationError("missing-option", "--filling or --filling-file is required");
    const auto first = text.find_first_not_of(" \t\r\n");
    Json doc;
    if (first != std::string::npos && text[first] == '{') {
      try {
        doc = Json::parse(text);
      } catch (const Json::exception& e) {
        throw ValidationError("json", std::string("malformed JSON: ") + e.what());
      }
    } else {
      doc["columns"] = Json::array();
      std::stringstream columns(text);
      std::string column;
      while (std::getline(columns, column, '/')) {
        Json entries = Json::array();
        for (Letter x : parse_column(column)) entries.push_back(x.value());
        doc["columns"].push_back(entries);
      }
    }
    if (!doc.contains("split")) doc["split"] = cfg_.split;
    if (!doc.contains("n")) {
      int n = cfg_.n.value_or(0);
      if (!cfg_.n && doc.contains("columns") && doc["columns"].is_array()) {
        for (const auto& col : doc["columns"])
          for (const auto& entry : col)
            n = std::max(n, entry.is_number_integer() ? std::abs(entry.get<int>())
                                                       : parse_letter(entry.get<std::string>()).abs());
        if (parse_lie_type(cfg_.type, 2).is_a()) n = std::max(n, 2);
      }
      doc["n"] = std::max(n, 1);
    }
    const LieType fallback = parse_lie_type(doc.value("type", cfg_.type), doc["n"].get<int>());
    Filling f = filling_from_json(doc, fallback);
    validate_filling(f);
    return f;
  }

  int chain() const {
    require_format({"text", "json"});
    const LieType t = type();
    const MuChain c = MuChain::build(t, mu(t));
    if (json()) {
      emit(chain_json(c));
      return kOk;
    }
    out_ << to_string(c) << "\n";
    if (cfg_.trace)
      for (int pos = 1; pos <= c.size(); ++pos)
        out_ << pos << "\t" << to_string(c.root(pos)) << "\tlevel " << c.level(pos) << "\n";
    return kOk;
  }

  int enumerate() const {
    require_format({"text", "json"});
    const LieType t = type();
    const MuChain c = MuChain::build(t, mu(t));
    const auto pairs = enumerate_admissible(c, cfg_.jobs);
    if (json()) {
      Json items = Json::array();
      for (const auto& fp : pairs) {
        Json item = folding_pair_json(c, fp);
        const Filling sigma = filling_map(c, fp);
        item["filling"] = filling_json(sigma, true);
        item["tau"] = filling_json(ord(sigma), true);
        items.push_back(std::move(item));
      }
      emit({{"schema", "chargelab.admissible/1"}, {"type", cfg_.type}, {"n", t.n()}, {"mu", c.mu()},
            {"count", pairs.size()}, {"pairs", items}});
      return kOk;
    }
    for (const auto& fp : pairs) {
      const Filling sigma = filling_map(c, fp);
      out_ << "w=" << to_string(fp.w) << " J={" << join(fp.J) << "} level=" << level_of(c, fp) << " weight=("
           << join(weight_of(c, fp)) << ") tau=" << inline_filling(ord(sigma)) << "\n";
    }
    out_ << pairs.size() << " admissible pairs\n";
    return kOk;
  }

  int fill() const {
    require_format({"text", "json"});
    const LieType t = type();
    const MuChain c = MuChain::build(t, mu(t));
    if (!cfg_.filling.empty() || !cfg_.filling_file.empty()) {
      const Filling sigma = load_filling();
      if (!(sigma.type == t)) throw ValidationError("type", "filling type does not match --type/--n");
      const FoldingPair fp = inverse_filling_map(c, sigma);
      if (json()) {
        Json doc = folding_pair_json(c, fp);
        doc["schema"] = "chargelab.folding-pair/1";
        emit(doc);
      } else {
        out_ << "w=" << to_string(fp.w) << " J={" << join(fp.J) << "}\n";
      }
      return kOk;
    }
    if (cfg_.w.empty()) throw ValidationError("missing-option", "fill needs --w and --J, or --filling");
    const FoldingPair fp{parse_weyl_element(t, cfg_.w), cfg_.J.empty() ? std::vector<int>{} : parse_int_list(cfg_.J)};
    validate_folding_pair(c, fp);
    const Filling sigma = filling_map(c, fp);
    const bool admissible = is_admissible(c, fp);
    if (json()) {
      Json doc = folding_pair_json(c, fp);
      doc["schema"] = "chargelab.fill/1";
      doc["admissible"] = admissible;
      doc["filling"] = filling_json(sigma, true);
      doc["tau"] = filling_json(ord(sigma), true);
      emit(doc);
      return kOk;
    }
    const FoldedChain folded = fold_chain(c, fp);
    out_ << pretty(sigma);
    out_ << "J+={" << join(folded.positive) << "} J-={" << join(folded.negative) << "}\n";
    out_ << "admissible: " << (admissible ? "yes" : "no") << ", level " << level_of(c, fp) << "\n";
    if (cfg_.trace) {
      out_ << "chain:";
      for (const auto& e : folded.elements) out_ << " " << to_string(e);
      out_ << "\ntau:\n" << pretty(ord(sigma));
    }
    return kOk;
  }

  int charge_cmd() const {
    require_format({"text", "json"});
    const Filling tau = load_filling();
    if (!in_b_mu(tau))
      throw ValidationError("b-mu", tau.type.is_a() ? "columns must be strictly increasing"
                                                    : "columns must form split KN columns");
    const ChargeTrace trace = charge_traced(tau);
    if (json()) {
      emit(charge_json(tau, trace));
      return kOk;
    }
    if (cfg_.trace) {
      out_ << render_biword(tau.type, charge_word(tau), trace);
      out_ << "per iteration: " << join(trace.per_iteration, " ") << "\n";
      out_ << "sigma:\n" << pretty(reconstruct_sigma(tau));
    }
    out_ << "charge " << trace.charge << "\n";
    return kOk;
  }

  int split() const {
    require_format({"text", "json"});
    if (cfg_.column.empty()) throw ValidationError("missing-option", "--column is required");
    const Column column = parse_column(cfg_.column);
    if (!is_increasing(column)) throw ValidationError("column", "column must be strictly increasing");
    const SplitColumn s = split_column(column);
    if (json()) {
      emit({{"schema", "chargelab.split/1"}, {"column", to_json(column)}, {"right", to_json(s.right)},
            {"left", to_json(s.left)}});
      return kOk;
    }
    out_ << "rC = " << to_string(s.right) << "\nlC = " << to_string(s.left) << "\n";
    return kOk;
  }

  int maxcol_cmd() const {
    require_format({"text", "json"});
    auto a = parse_int_list(cfg_.a);
    auto b = cfg_.b.empty() ? std::vector<int>{} : parse_int_list(cfg_.b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
      throw ValidationError("column", "A and B must not repeat entries");
    const auto c = maxcol(a, b);
    if (json()) {
      emit({{"schema", "chargelab.maxcol/1"}, {"a", a}, {"b", b}, {"maxcol", c}});
      return kOk;
    }
    out_ << join(c) << "\n";
    return kOk;
  }

  int qbg() const {
    const LieType t = type();
    if ((t.is_a() && t.n() > 6) || (t.is_c() && t.n() > 5))
      throw ValidationError("size", "graph export is limited to A with n <= 6 and C with n <= 5");
    if (cfg_.format == "dot") {
      out_ << qbg_to_dot(t);
      return kOk;
    }
    if (json()) {
      emit(qbg_json(t));
      return kOk;
    }
    for (const WeylElement& w : all_elements(t))
      for (const QbgEdge& e : qbg_edges(w))
        out_ << to_string(w) << " -> " << to_string(w.times(e.root)) << " " << to_string(e.root) << " "
             << to_string(e.kind) << "\n";
    return kOk;
  }

  int poly() const {
    require_format({"text", "json"});
    const LieType t = type();
    const Weight m = mu(t);
    if (cfg_.method != "ramyip" && cfg_.method != "charge" && cfg_.method != "both")
      throw ValidationError("method", "unknown method '" + cfg_.method + "'");
    std::optional<LaurentPoly> ram_yip, by_charge;
    if (cfg_.method != "charge") ram_yip = ram_yip_t0(t, m, cfg_.jobs);
    if (cfg_.method != "ramyip") by_charge = charge_formula_t0(t, m, cfg_.jobs);
    const LaurentPoly& p = ram_yip ? *ram_yip : *by_charge;
    const bool agree = !(ram_yip && by_charge) || *ram_yip == *by_charge;
    std::vector<CharacterTerm> terms;
    if (cfg_.decompose) terms = character_decomposition(t, p);
    if (json()) {
      Json doc = poly_json(p);
      doc["method"] = cfg_.method;
      if (cfg_.method == "both") {
        doc["agree"] = agree;
        if (!agree) doc["charge"] = poly_json(*by_charge);
      }
      if (cfg_.decompose) {
        Json items = Json::array();
        for (const auto& term : terms)
          items.push_back({{"lambda", term.lambda}, {"multiplicity", to_string(term.multiplicity)}});
        doc["decomposition"] = items;
      }
      emit(doc);
    } else {
      out_ << to_string(p) << "\n";
      if (!agree) out_ << "charge formula: " << to_string(*by_charge) << "\n";
      for (const auto& term : terms)
        out_ << "chi(" << join(term.lambda) << ") * (" << to_string(term.multiplicity) << ")\n";
    }
    if (!agree) throw VerificationFailed{"the Ram-Yip and charge computations differ"};
    return kOk;
  }

  int verify() const {
    require_format({"text", "json"});
    VerifyOptions o;
    o.scope = cfg_.scope;
    o.jobs = cfg_.jobs;
    o.inject_qbg_fault = cfg_.inject_fault;
    if (cfg_.n) {
      const int n = *cfg_.n;
      const bool all = o.scope == "all";
      if (all || o.scope == "A-qbg") o.qbg_a_max_n = n;
      if (all || o.scope == "C-qbg") o.qbg_c_max_n = n;
      if (all || o.scope == "paths") o.path_max_n = n;
      if (all || o.scope == "A-bijection" || o.scope == "poly" || o.scope == "chains" || o.scope == "admissible")
        o.a_max_n = n;
      if (all || o.scope == "C-bijection" || o.scope == "poly" || o.scope == "chains" || o.scope == "admissible")
        o.c_max_n = n;
    }
    if (cfg_.size) o.a_max_size = o.c_max_size = *cfg_.size;
    const auto results = run_verification(o);
    const bool passed = all_passed(results);
    if (json()) {
      Json checks = Json::array();
      for (const auto& r : results)
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked},
                          {"seconds", r.seconds}, {"detail", r.detail}});
      emit({{"schema", "chargelab.verify/1"}, {"scope", o.scope}, {"passed", passed}, {"checks", checks}});
    } else {
      long failed = 0;
      for (const auto& r : results) {
        out_ << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checked << " checked, " << r.seconds
             << " s)\n";
        if (!r.passed) {
          out_ << "       " << r.detail << "\n";
          ++failed;
        }
      }
      out_ << (passed ? "all " + std::to_string(results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
           << "\n";
    }
    if (!passed) throw VerificationFailed{"verification failed"};
    return kOk;
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
};

void report(const Config& cfg, std::ostream& err, const std::string& kind, const std::string& condition,
            const std::string& message) {
  if (cfg.format == "json") {
    err << Json{{"schema", "chargelab.error/1"}, {"kind", kind}, {"condition", condition}, {"message", message}}.dump()
        << "\n";
  } else {
    err << "error [" << condition << "]: " << message << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("CHARGE_LAB_JOBS")) {
    try {
      cfg.jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      err << "error [jobs]: CHARGE_LAB_JOBS must be a positive integer\n";
      return kValidation;
    }
  }

  CLI::App app{"Macdonald polynomials at t=0 in types A and C: alcove walks and charge"};
  app.name("chargelab");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--type", cfg.type, "Root system type")->check(CLI::IsMember({"A", "C", "a", "c"}));
  app.add_option("--n", cfg.n, "Rank parameter: S_n for type A, B_n for type C")->check(CLI::PositiveNumber);
  app.add_option("--mu", cfg.mu, "Partition, comma separated, no trailing zeros needed");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--method", cfg.method, "Polynomial computation")->check(CLI::IsMember({"ramyip", "charge", "both"}));
  app.add_flag("--trace", cfg.trace, "Print intermediate data");
  app.add_option("--scope", cfg.scope, "Verification scope");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default from CHARGE_LAB_JOBS)")->check(CLI::PositiveNumber);

  auto* chain = app.add_subcommand("chain", "Print the mu-chain of roots");
  auto* enumerate = app.add_subcommand("enumerate", "List the admissible folding pairs");
  auto* fill = app.add_subcommand("fill", "Filling of a folding pair, or the pair of a filling");
  fill->add_option("--w", cfg.w, "Weyl group element in window notation, e.g. 2134 or 1,-2,3");
  fill->add_option("--J", cfg.J, "Folding positions, comma separated");
  fill->add_option("--filling", cfg.filling, "Filling to invert (inline or JSON)");
  fill->add_option("--filling-file", cfg.filling_file, "File holding a JSON filling");
  fill->add_flag("--split", cfg.split, "Type C columns are already split");
  auto* charge = app.add_subcommand("charge", "Charge of a filling in B_mu");
  charge->add_option("--filling", cfg.filling, "Columns left to right: '2/1,2,4/...' or a JSON document");
  charge->add_option("--filling-file", cfg.filling_file, "File holding a JSON filling");
  charge->add_flag("--split", cfg.split, "Type C columns are already split (rC, lC pairs)");
  auto* split = app.add_subcommand("split", "Split a KN column");
  split->add_option("--column", cfg.column, "Increasing column, e.g. 4,5,-5,-4,-3")->required();
  auto* maxcol_cmd = app.add_subcommand("maxcol", "Largest sorted column below A avoiding B");
  maxcol_cmd->add_option("--a", cfg.a, "Column A")->required();
  maxcol_cmd->add_option("--b", cfg.b, "Column B");
  auto* qbg = app.add_subcommand("qbg", "Quantum Bruhat graph export");
  auto* poly = app.add_subcommand("poly", "P_mu(X; q, 0)");
  poly->add_flag("--decompose", cfg.decompose, "Expand in irreducible characters");
  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify->add_option("--size", cfg.size, "Bound on |mu| for the bijection and polynomial suites")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  Session session(cfg, out);
  try {
    if (chain->parsed()) return session.chain();
    if (enumerate->parsed()) return session.enumerate();
    if (fill->parsed()) return session.fill();
    if (charge->parsed()) return session.charge_cmd();
    if (split->parsed()) return session.split();
    if (maxcol_cmd->parsed()) return session.maxcol_cmd();
    if (qbg->parsed()) return session.qbg();
    if (poly->parsed()) return session.poly();
    if (verify->parsed()) return session.verify();
  } catch (const ValidationError& e) {
    report(cfg, err, "validation", e.condition(), e.what());
    return kValidation;
  } catch (const VerificationFailed& e) {
    report(cfg, err, "verification", "verification", e.message);
    return kVerificationFailed;
  } catch (const InternalError& e) {
    report(cfg, err, "internal", "internal", e.what());
    return kInternal;
  } catch (const std::exception& e) {
    report(cfg, err, "internal", "internal", e.what());
    return kInternal;
  }
  return kValidation;
}

}  // namespace chargelab
