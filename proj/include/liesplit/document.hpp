#pragma once

// JSON documents: algebra input, subalgebra input, reports. Every
// coefficient is an exact rational written as a string.

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "liesplit/exterior.hpp"
#include "liesplit/grading.hpp"
#include "liesplit/pbw.hpp"
#include "liesplit/subalgebra.hpp"
#include "liesplit/superalgebra.hpp"

namespace liesplit {

using Json = nlohmann::ordered_json;
using LabelCombination = std::vector<std::pair<std::string, Scalar>>;

namespace detail {

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline Scalar json_scalar(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  throw InputError("coefficients must be rational strings or integers");
}

inline LabelCombination json_combination(const Json& j) {
  if (!j.is_array()) throw InputError("combination must be a list of [label, coefficient] pairs");
  LabelCombination out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("combination entry must be [label, coefficient]");
    out.emplace_back(require_string(e[0], "label"), json_scalar(e[1]));
  }
  return out;
}

inline Json combination_json(const LabelCombination& c) {
  Json out = Json::array();
  for (const auto& [l, v] : c) out.push_back(Json::array({l, to_string(v)}));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct BracketEntry {
  std::string left, right;
  LabelCombination result;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct AlgebraDocument {
  std::string name;
  std::vector<BasisElement> basis;
  std::vector<BracketEntry> brackets;
  Json metadata;  // null when absent

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;

  [[nodiscard]] LieSuperalgebra to_algebra() const {
    AlgebraBuilder b(name);
    for (const auto& e : basis) b.add(e.label, e.parity);
    for (const auto& e : brackets) b.bracket(e.left, e.right, e.result);
    return b.build();
  }

  /// Nonzero brackets [a, b] with a ≤ b, plus [b, a] whenever it is not the
  /// super-antisymmetric image of [a, b].
  static AlgebraDocument from_algebra(const LieSuperalgebra& g) {
    AlgebraDocument d;
    d.name = g.name();
    d.basis = g.basis();
    auto entry = [&](std::size_t a, std::size_t b) {
      BracketEntry e{g.label(a), g.label(b), {}};
      for (const auto& [c, v] : g.bracket(a, b)) e.result.emplace_back(g.label(c), v);
      return e;
    };
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = a; b < g.dim(); ++b) {
        const auto& ab = g.bracket(a, b);
        if (!ab.empty()) d.brackets.push_back(entry(a, b));
        if (a == b) continue;
        Scalar s = (g.parity(a) * g.parity(b)) ? Scalar(1) : Scalar(-1);
        Combination expected;
        for (const auto& [c, v] : ab) expected.emplace_back(c, s * v);
        if (g.bracket(b, a) != expected) d.brackets.push_back(entry(b, a));
      }
    return d;
  }
};

inline AlgebraDocument parse_algebra_document(const std::string& text) {
  Json j = detail::parse_json(text);
  AlgebraDocument d;
  d.name = detail::require_string(detail::require(j, "name"), "name");
  const Json& basis = detail::require(j, "basis");
  if (!basis.is_array()) throw InputError("basis must be a list");
  std::set<std::string> labels;
  for (const auto& e : basis) {
    std::string label = detail::require_string(detail::require(e, "label"), "label");
    const Json& p = detail::require(e, "parity");
    if (!p.is_number_integer() || (p.get<long long>() != 0 && p.get<long long>() != 1))
      throw InputError("parity of '" + label + "' must be 0 or 1");
    if (!labels.insert(label).second) throw InputError("duplicate basis label '" + label + "'");
    d.basis.push_back({label, static_cast<int>(p.get<long long>())});
  }
  if (j.contains("brackets")) {
    const Json& br = j.at("brackets");
    if (!br.is_array()) throw InputError("brackets must be a list");
    for (const auto& e : br) {
      BracketEntry b{detail::require_string(detail::require(e, "left"), "left"),
                     detail::require_string(detail::require(e, "right"), "right"),
                     detail::json_combination(detail::require(e, "result"))};
      for (const auto* l : {&b.left, &b.right})
        if (!labels.count(*l)) throw InputError("unknown basis label '" + *l + "' in bracket");
      for (const auto& [l, v] : b.result)
        if (!labels.count(l)) throw InputError("unknown basis label '" + l + "' in bracket result");
      d.brackets.push_back(std::move(b));
    }
  }
  if (j.contains("metadata")) d.metadata = j.at("metadata");
  return d;
}

inline std::string print_algebra_document(const AlgebraDocument& d) {
  Json j;
  j["name"] = d.name;
  j["basis"] = Json::array();
  for (const auto& e : d.basis) j["basis"].push_back({{"label", e.label}, {"parity", e.parity}});
  j["brackets"] = Json::array();
  for (const auto& b : d.brackets)
    j["brackets"].push_back(
        {{"left", b.left}, {"right", b.right}, {"result", detail::combination_json(b.result)}});
  if (!d.metadata.is_null()) j["metadata"] = d.metadata;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

/// Spanning vectors of h, each either dense (one coefficient per basis
/// element, in basis order) or sparse ([label, coefficient] pairs).
struct SubalgebraDocument {
  using Entry = std::variant<Vector, LabelCombination>;
  std::string algebra;  // informational
  std::vector<Entry> vectors;

  friend bool operator==(const SubalgebraDocument&, const SubalgebraDocument&) = default;

  [[nodiscard]] SubalgebraEmbedding to_embedding(const LieSuperalgebra& g) const {
    std::vector<Vector> vs;
    for (const auto& e : vectors) {
      if (const auto* dense = std::get_if<Vector>(&e)) {
        if (dense->size() != g.dim())
          throw InputError("dense subalgebra vector has " + std::to_string(dense->size()) +
                           " entries, algebra has dimension " + std::to_string(g.dim()));
        vs.push_back(*dense);
      } else {
        Vector v(g.dim());
        for (const auto& [l, c] : std::get<LabelCombination>(e)) v[g.index_of(l)] += c;
        vs.push_back(std::move(v));
      }
    }
    return SubalgebraEmbedding(g, std::move(vs));
  }

  static SubalgebraDocument from_embedding(const SubalgebraEmbedding& h) {
    SubalgebraDocument d;
    const auto& g = h.parent();
    d.algebra = g.name();
    for (const auto& v : h.vectors()) {
      LabelCombination c;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) c.emplace_back(g.label(i), v[i]);
      d.vectors.emplace_back(std::move(c));
    }
    return d;
  }
};

inline SubalgebraDocument parse_subalgebra_document(const std::string& text) {
  Json j = detail::parse_json(text);
  SubalgebraDocument d;
  if (j.contains("algebra")) d.algebra = detail::require_string(j.at("algebra"), "algebra");
  const Json& vs = detail::require(j, "vectors");
  if (!vs.is_array()) throw InputError("vectors must be a list");
  for (const auto& v : vs) {
    if (!v.is_array()) throw InputError("each subalgebra vector must be a list");
    bool dense = !v.empty() && !v.front().is_array();
    if (dense) {
      Vector x;
      for (const auto& c : v) x.push_back(detail::json_scalar(c));
      d.vectors.emplace_back(std::move(x));
    } else {
      d.vectors.emplace_back(detail::json_combination(v));
    }
  }
  return d;
}

inline std::string print_subalgebra_document(const SubalgebraDocument& d) {
  Json j;
  j["algebra"] = d.algebra;
  j["vectors"] = Json::array();
  for (const auto& e : d.vectors) {
    if (const auto* dense = std::get_if<Vector>(&e)) {
      Json a = Json::array();
      for (const auto& c : *dense) a.push_back(to_string(c));
      j["vectors"].push_back(std::move(a));
    } else {
      j["vectors"].push_back(detail::combination_json(std::get<LabelCombination>(e)));
    }
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string operation;
  Json inputs = Json::object();
  Json result = Json::object();
  Json assumptions = Json::object();
  std::string version = kToolVersion;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline std::string print_report(const ReportDocument& r) {
  Json j;
  j["tool"] = "liesplit";
  j["version"] = r.version;
  j["operation"] = r.operation;
  j["inputs"] = r.inputs;
  j["assumptions"] = r.assumptions;
  j["result"] = r.result;
  return j.dump(2) + "\n";
}

inline ReportDocument parse_report(const std::string& text) {
  Json j = detail::parse_json(text);
  ReportDocument r;
  if (detail::require_string(detail::require(j, "tool"), "tool") != "liesplit")
    throw InputError("not a liesplit report");
  r.version = detail::require_string(detail::require(j, "version"), "version");
  r.operation = detail::require_string(detail::require(j, "operation"), "operation");
  r.inputs = detail::require(j, "inputs");
  r.assumptions = detail::require(j, "assumptions");
  r.result = detail::require(j, "result");
  return r;
}

namespace detail {

inline void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const Json& x) {
                              return x.is_primitive();
                            })))
        return false;
    return true;
  };
  auto inline_array = [&](const Json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      if (v[i].is_array()) {
        s += "(";
        for (std::size_t k = 0; k < v[i].size(); ++k) s += (k ? " " : "") + scalar(v[i][k]);
        s += ")";
      } else {
        s += scalar(v[i]);
      }
    }
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) os << pad << k << ": " << scalar(v) << "\n";
      else if (flat(v)) os << pad << k << ": " << inline_array(v) << "\n";
      else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) os << pad << "- " << scalar(v) << "\n";
      else if (flat(v)) os << pad << "- " << inline_array(v) << "\n";
      else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace detail

/// Indented plain-text rendering of a report.
inline std::string render_human(const ReportDocument& r) {
  std::ostringstream os;
  os << "liesplit " << r.version << ": " << r.operation << "\n";
  Json body;
  body["inputs"] = r.inputs;
  body["assumptions"] = r.assumptions;
  body["result"] = r.result;
  detail::render(os, body, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Result payload encoders

inline Json vector_json(const LieSuperalgebra& g, const Vector& v) {
  LabelCombination c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) c.emplace_back(g.label(i), v[i]);
  return detail::combination_json(c);
}

inline Json subspace_json(const LieSuperalgebra& g, const SubspaceReport& s) {
  Json j;
  j["dimension"] = s.dimension;
  j["is_subalgebra"] = s.is_subalgebra;
  j["is_ideal"] = s.is_ideal;
  j["basis"] = Json::array();
  for (const auto& v : s.basis) j["basis"].push_back(vector_json(g, v));
  return j;
}

inline Json violations_json(const LieSuperalgebra& g, const std::vector<Violation>& vs,
                            const std::vector<std::string>& witness_labels) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json w = Json::array();
    for (auto i : v.witness) w.push_back(witness_labels.at(i));
    out.push_back({{"kind", Violation::kind_name(v.kind)},
                   {"witness", w},
                   {"residual", vector_json(g, v.residual)}});
  }
  return out;
}

inline Json pbw_json(const Envelope& env, const PBWElement& u) {
  const auto& g = env.algebra();
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) {
    Json word = Json::array();
    for (auto i : env.word_of(m)) word.push_back(g.label(i));
    terms.push_back({{"word", word}, {"coefficient", to_string(c)}});
  }
  return {{"text", env.format(u)}, {"filtration_degree", Envelope::filtration_degree(u)},
          {"terms", terms}};
}

inline Json poly_json(const LieSuperalgebra& g, const ExteriorPoly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json mask = Json::array();
    for (int b : bits_of(m)) mask.push_back(g.label(g.odd_generator(static_cast<std::size_t>(b))));
    out.push_back({{"mask", mask}, {"coefficient", to_string(c)}});
  }
  return out;
}

/// Targets are named by the basis element of g representing them.
inline Json field_json(const FieldModule& fm, const ExteriorField& w) {
  const auto& g = fm.algebra();
  bool full = w.tag() == TargetSpace::Full;
  Json out = Json::array();
  for (const auto& [k, c] : w.terms()) {
    Json mask = Json::array();
    for (int b : bits_of(k.mask)) mask.push_back(g.label(g.odd_generator(static_cast<std::size_t>(b))));
    std::size_t t = full ? k.target : fm.target_generator(k.target);
    out.push_back({{"mask", mask}, {"target", g.label(t)}, {"coefficient", to_string(c)}});
  }
  return out;
}

inline Json solution_json(const FieldModule& fm, const FieldModule& full,
                          const GradingSolutionSpace& s) {
  Json j;
  j["space"] = to_string(s.space);
  j["feasible"] = s.feasible;
  j["unknowns"] = s.unknowns;
  j["equations"] = s.equations;
  j["rank"] = s.rank;
  j["augmented_rank"] = s.augmented_rank;
  j["dimension"] = s.dimension;
  j["particular"] = s.particular ? field_json(fm, *s.particular) : Json(nullptr);
  j["lift"] = s.lift ? field_json(full, *s.lift) : Json(nullptr);
  j["homogeneous"] = Json::array();
  for (const auto& h : s.homogeneous) j["homogeneous"].push_back(field_json(fm, h));
  return j;
}

inline Json sufficient_json(const LieSuperalgebra& g, const SufficientSplitReport& s) {
  Json j;
  j["holds"] = s.holds;
  j["odd_brackets"] = subspace_json(g, s.odd_brackets);
  j["even_part"] = subspace_json(g, s.even_part);
  j["adjoint_kernel_on_odd"] = subspace_json(g, s.adjoint_kernel);
  j["even_part_meet_kernel"] = subspace_json(g, s.target);
  return j;
}

}  // namespace liesplit
