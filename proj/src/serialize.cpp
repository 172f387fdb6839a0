#include "chargelab/serialize.hpp"

#include "chargelab/errors.hpp"
#include "chargelab/qbg.hpp"

namespace chargelab {

namespace {
std::string family_name(const LieType& type) { return type.is_a() ? "A" : "C"; }

std::string part_kind(PartKind kind) {
  switch (kind) {
    case PartKind::Whole: return "whole";
    case PartKind::Right: return "right";
    case PartKind::Left: return "left";
  }
  return "?";
}
}  // namespace

Json to_json(const WeylElement& w) {
  Json out = Json::array();
  for (Letter x : w.window()) out.push_back(x.value());
  return out;
}

Json to_json(RootLabel r) {
  static const char* kinds[] = {"diff", "sum", "long"};
  return {{"kind", kinds[static_cast<int>(r.kind)]}, {"i", r.i}, {"j", r.j}, {"label", to_string(r)}};
}

Json to_json(const Column& column) {
  Json out = Json::array();
  for (Letter x : column) out.push_back(x.value());
  return out;
}

Json chain_json(const MuChain& chain) {
  Json roots = Json::array();
  for (int pos = 1; pos <= chain.size(); ++pos) {
    Json r = to_json(chain.root(pos));
    r["position"] = pos;
    r["level"] = chain.level(pos);
    roots.push_back(std::move(r));
  }
  Json parts = Json::array();
  for (const auto& p : chain.parts())
    parts.push_back({{"column", p.column}, {"kind", part_kind(p.kind)}, {"height", p.height},
                     {"first", p.first}, {"last", p.last}});
  return {{"schema", "chargelab.chain/1"}, {"type", family_name(chain.type())}, {"n", chain.type().n()},
          {"mu", chain.mu()}, {"roots", roots}, {"parts", parts}, {"text", to_string(chain)}};
}

Json folding_pair_json(const MuChain& chain, const FoldingPair& fp) {
  const FoldedChain folded = fold_chain(chain, fp);
  return {{"w", to_json(fp.w)},           {"J", fp.J},
          {"Jplus", folded.positive},     {"Jminus", folded.negative},
          {"weight", weight_of(chain, fp)}, {"level", level_of(chain, fp)}};
}

Json filling_json(const Filling& f, bool split) {
  Json cols = Json::array();
  for (const auto& c : f.columns) cols.push_back(to_json(c));
  return {{"type", family_name(f.type)}, {"n", f.type.n()}, {"shape", shape(f)}, {"columns", cols}, {"split", split}};
}

Json poly_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({{"q", key.first}, {"x", key.second}, {"coeff", c}});
  return {{"schema", "chargelab.poly/1"}, {"nvars", p.nvars()}, {"terms", terms}, {"text", to_string(p)}};
}

Json charge_json(const Filling& tau, const ChargeTrace& trace) {
  const auto word = charge_word(tau);
  Json biword = Json::array();
  for (std::size_t k = 0; k < word.size(); ++k)
    biword.push_back({{"top", word[k].top.value()},
                      {"label", label_to_string(tau.type, word[k].label)},
                      {"iteration", trace.iteration[k]}});
  return {{"schema", "chargelab.charge/1"}, {"filling", filling_json(tau, true)}, {"charge", trace.charge},
          {"per_iteration", trace.per_iteration}, {"biword", biword}};
}

Json qbg_json(const LieType& type) {
  Json nodes = Json::array(), edges = Json::array();
  for (const WeylElement& w : all_elements(type)) {
    nodes.push_back({{"window", to_json(w)}, {"label", to_string(w)}, {"length", length(w)}});
    for (const QbgEdge& e : qbg_edges(w))
      edges.push_back({{"from", to_string(w)}, {"to", to_string(w.times(e.root))},
                       {"root", to_string(e.root)}, {"kind", to_string(e.kind)}});
  }
  return {{"schema", "chargelab.qbg/1"}, {"type", family_name(type)}, {"n", type.n()},
          {"nodes", nodes}, {"edges", edges}};
}

Filling filling_from_json(const Json& doc, const LieType& fallback) {
  try {
    LieType type = fallback;
    if (doc.contains("type")) {
      const int n = doc.contains("n") ? doc.at("n").get<int>() : fallback.n();
      type = parse_lie_type(doc.at("type").get<std::string>(), n);
    }
    const bool split = doc.value("split", true);
    Filling f{type, {}};
    const Json& columns = doc.at("columns");
    if (!columns.is_array()) throw ValidationError("json", "\"columns\" must be an array of arrays");
    for (const auto& col : columns) {
      if (!col.is_array()) throw ValidationError("json", "each column must be an array");
      Column c;
      for (const auto& entry : col)
        c.push_back(entry.is_number_integer() ? Letter(entry.get<int>()) : parse_letter(entry.get<std::string>()));
      f.columns.push_back(std::move(c));
    }
    if (!split && type.is_c()) {
      Filling out{type, {}};
      for (const auto& kn : f.columns) {
        const SplitColumn s = split_column(kn);
        out.columns.push_back(s.right);
        out.columns.push_back(s.left);
      }
      return out;
    }
    return f;
  } catch (const Json::exception& e) {
    throw ValidationError("json", std::string("malformed filling document: ") + e.what());
  }
}

}  // namespace chargelab
