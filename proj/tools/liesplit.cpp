// liesplit: command line front end.
//
// Exit codes: 0 on success (including negative verdicts), 2 on bad input,
// 3 on internal failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liesplit/liesplit.hpp"

using namespace liesplit;

namespace {

struct Source {
  std::string algebra_file;
  std::string catalog;  // gl:m,n | osp12 | abelian:e,o
  std::string subalgebra_file;
  std::string parabolic;  // r,s
  std::string h_labels;   // comma separated basis labels
};

struct Global {
  std::string format = "machine";
  bool assume_connected = true;
  unsigned threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::size_t> parse_naturals(const std::string& s, std::size_t count, const char* what) {
  auto parts = split(s, ',');
  if (parts.size() != count)
    throw InputError(std::string(what) + " expects " + std::to_string(count) + " comma separated integers");
  std::vector<std::size_t> out;
  for (const auto& p : parts) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 6)
      throw InputError(std::string(what) + ": '" + p + "' is not a non-negative integer");
    out.push_back(std::stoul(p));
  }
  return out;
}

struct CatalogSpec {
  std::string name;
  std::vector<std::size_t> params;
};

CatalogSpec parse_catalog(const std::string& spec) {
  auto colon = spec.find(':');
  CatalogSpec c{spec.substr(0, colon), {}};
  std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (c.name == "gl" || c.name == "abelian") c.params = parse_naturals(params, 2, c.name.c_str());
  else if (c.name == "osp12") {
    if (!params.empty()) throw InputError("osp12 takes no parameters");
  } else {
    throw InputError("unknown catalog algebra '" + c.name + "' (known: gl, osp12, abelian)");
  }
  return c;
}

LieSuperalgebra catalog_algebra(const CatalogSpec& c) {
  if (c.name == "gl") return catalog_gl(c.params[0], c.params[1]);
  if (c.name == "abelian") return catalog_abelian(c.params[0], c.params[1]);
  return catalog_osp12();
}

struct Loaded {
  LieSuperalgebra g;
  std::optional<SubalgebraEmbedding> h;
  Json echo;
};

Loaded load(const Source& src, bool need_h) {
  if (src.algebra_file.empty() == src.catalog.empty())
    throw InputError("give exactly one of --algebra FILE or --catalog NAME");
  std::optional<CatalogSpec> cat;
  LieSuperalgebra g = [&] {
    if (!src.catalog.empty()) {
      cat = parse_catalog(src.catalog);
      return catalog_algebra(*cat);
    }
    return parse_algebra_document(read_file(src.algebra_file)).to_algebra();
  }();
  Loaded out{g, std::nullopt, Json::object()};
  out.echo["algebra"] = {{"name", g.name()},
                         {"dim", g.dim()},
                         {"dim_even", g.dim_even()},
                         {"dim_odd", g.dim_odd()}};
  int given = !src.subalgebra_file.empty() + !src.parabolic.empty() + !src.h_labels.empty();
  if (given > 1) throw InputError("give at most one of --subalgebra, --parabolic, --h-labels");
  if (!src.subalgebra_file.empty()) {
    out.h = parse_subalgebra_document(read_file(src.subalgebra_file)).to_embedding(g);
  } else if (!src.parabolic.empty()) {
    if (!cat || cat->name != "gl") throw InputError("--parabolic needs --catalog gl:m,n");
    auto rs = parse_naturals(src.parabolic, 2, "--parabolic");
    out.h = catalog_parabolic(g, cat->params[0], cat->params[1], rs[0], rs[1]);
  } else if (!src.h_labels.empty()) {
    out.h = SubalgebraEmbedding::from_labels(g, split(src.h_labels, ','));
  } else if (need_h) {
    out.h = SubalgebraEmbedding(g, {});
  }
  if (out.h) {
    out.echo["subalgebra"] = {{"dim", out.h->dim()},
                              {"dim_even", out.h->even_part().size()},
                              {"dim_odd", out.h->odd_part().size()},
                              {"vectors", Json::array()}};
    for (const auto& v : out.h->vectors()) out.echo["subalgebra"]["vectors"].push_back(vector_json(g, v));
  }
  return out;
}

/// Refuses subalgebras that fail validation: every downstream computation
/// assumes a homogeneous, bracket-closed h.
void require_valid(const SubalgebraEmbedding& h) {
  auto vs = validate_subalgebra(h);
  if (!vs.empty())
    throw InputError(std::string("subalgebra is not a homogeneous subsuperalgebra (") +
                     Violation::kind_name(vs.front().kind) + " violation); run validate for details");
}

Json assumptions(const Global& gl) {
  return {{"connected_groups", gl.assume_connected},
          {"invariance", gl.assume_connected ? "h0-invariance stands for H0-invariance"
                                             : "H0-invariance not implied; only h-invariance was checked"}};
}

std::vector<std::string> h_labels(const SubalgebraEmbedding& h) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < h.dim(); ++i) out.push_back("h[" + std::to_string(i) + "]");
  return out;
}

// ---------------------------------------------------------------------------

ReportDocument cmd_validate(const Source& src, const Global& gl) {
  auto in = load(src, false);
  ReportDocument r{"validate", in.echo, {}, assumptions(gl)};
  std::vector<std::string> labels;
  for (const auto& b : in.g.basis()) labels.push_back(b.label);
  auto va = validate_superalgebra(in.g);
  r.result["algebra"] = {{"valid", va.empty()}, {"violations", violations_json(in.g, va, labels)}};
  if (in.h) {
    auto vh = validate_subalgebra(*in.h);
    r.result["subalgebra"] = {{"valid", vh.empty()},
                              {"violations", violations_json(in.g, vh, h_labels(*in.h))},
                              {"quotient_dim", in.h->quotient_dim()}};
    if (va.empty() && vh.empty())
      r.result["subalgebra"]["largest_ideal"] = subspace_json(in.g, largest_ideal_in(*in.h));
  }
  if (va.empty()) r.result["adjoint_kernel_on_odd"] = subspace_json(in.g, adjoint_kernel_on_odd(in.g));
  return r;
}

ReportDocument cmd_gr(const Source& src, const Global& gl) {
  auto in = load(src, false);
  ReportDocument r{"gr", in.echo, {}, assumptions(gl)};
  auto g = gr_superalgebra(in.g);
  auto doc = AlgebraDocument::from_algebra(g);
  r.result["algebra"] = Json::parse(print_algebra_document(doc));
  r.result["valid"] = validate_superalgebra(g).empty();
  return r;
}

ReportDocument cmd_envelope(const Source& src, const Global& gl, const std::string& word_text,
                            const std::string& op) {
  auto in = load(src, false);
  ReportDocument r{"envelope", in.echo, {}, assumptions(gl)};
  Envelope env(in.g);
  std::vector<std::size_t> word;
  Json wj = Json::array();
  for (const auto& l : split(word_text, ',')) {
    word.push_back(in.g.index_of(l));
    wj.push_back(l);
  }
  r.inputs["word"] = wj;
  r.inputs["op"] = op;
  if (op == "normal") {
    r.result["element"] = pbw_json(env, env.normal_form(word));
  } else if (op == "antipode") {
    auto u = env.normal_form(word);
    r.result["element"] = pbw_json(env, u);
    r.result["antipode"] = pbw_json(env, env.antipode(u));
  } else if (op == "gamma") {
    // X_{i1} ∧ … ∧ X_{ir} in the given order, reordered with its sign.
    Mask m = 0;
    int sign = 1;
    for (auto i : word) {
      if (in.g.parity(i) != 1) throw InputError("gamma takes odd generators only");
      Mask bit = Mask(1) << (i - in.g.dim_even());
      if (m & bit) {
        sign = 0;
        break;
      }
      sign *= wedge_sign(m, bit);
      m |= bit;
    }
    OddMultivector mv;
    if (sign) mv.emplace(m, Scalar(sign));
    r.result["gamma"] = pbw_json(env, env.gamma(mv));
  } else if (op == "decompose") {
    auto u = env.normal_form(word);
    r.result["element"] = pbw_json(env, u);
    Json terms = Json::array();
    for (const auto& t : env.decompose_left_even(u)) {
      Json mask = Json::array();
      for (int b : bits_of(t.mask)) mask.push_back(in.g.label(in.g.odd_generator(static_cast<std::size_t>(b))));
      terms.push_back({{"even_factor", pbw_json(env, t.even_factor)},
                       {"mask", mask},
                       {"coefficient", to_string(t.coefficient)}});
    }
    r.result["decomposition"] = terms;
  } else {
    throw InputError("unknown envelope op '" + op + "' (normal, gamma, antipode, decompose)");
  }
  return r;
}

void require_algebra(const LieSuperalgebra& g) {
  auto va = validate_superalgebra(g);
  if (!va.empty())
    throw InputError(std::string("algebra fails validation (") + Violation::kind_name(va.front().kind) +
                     " violation); run validate for details");
}

ReportDocument cmd_invariants(const Source& src, const Global& gl, const std::string& space,
                              const std::string& degrees, const std::string& parity,
                              const std::string& invariance) {
  auto in = load(src, true);
  require_algebra(in.g);
  require_valid(*in.h);
  ReportDocument r{"invariants", in.echo, {}, assumptions(gl)};
  if (space != "full" && space != "quotient") throw InputError("--space is full or quotient");
  if (invariance != "h" && invariance != "h0") throw InputError("--invariance is h or h0");
  ParityFilter pf = parity == "even" ? ParityFilter::Even
                    : parity == "odd" ? ParityFilter::Odd
                    : parity == "any" ? ParityFilter::Any
                                      : throw InputError("--parity is even, odd or any");
  std::set<int> degs;
  if (!degrees.empty())
    for (auto d : parse_naturals(degrees, split(degrees, ',').size(), "--degrees")) degs.insert(static_cast<int>(d));
  auto act = std::make_shared<const ExteriorAction>(in.g);
  auto fm = space == "full" ? FieldModule::full(act) : FieldModule::quotient(act, *in.h);
  auto basis = invariant_subspace(fm, *in.h, degs, pf,
                                  invariance == "h" ? InvarianceAlgebra::Whole : InvarianceAlgebra::EvenPart,
                                  gl.threads);
  Json dj = Json::array();
  for (int d : degs) dj.push_back(d);
  r.inputs["space"] = space;
  r.inputs["degrees"] = dj;
  r.inputs["parity"] = parity;
  r.inputs["invariance"] = invariance;
  r.result["dimension"] = basis.size();
  r.result["basis"] = Json::array();
  for (const auto& w : basis) r.result["basis"].push_back(field_json(fm, w));
  return r;
}

ReportDocument cmd_ranks(const Source& src, const Global& gl) {
  auto in = load(src, true);
  require_valid(*in.h);
  ReportDocument r{"ranks", in.echo, {}, assumptions(gl)};
  auto ranks = split_model_ranks(*in.h);
  std::size_t total = 0;
  for (auto x : ranks) total += x;
  r.result["ranks"] = ranks;
  r.result["total"] = total;
  return r;
}

ReportDocument cmd_split_check(const Source& src, const Global& gl) {
  auto in = load(src, true);
  require_algebra(in.g);
  require_valid(*in.h);
  ReportDocument r{"split-check", in.echo, {}, assumptions(gl)};
  auto act = std::make_shared<const ExteriorAction>(in.g);
  VerdictContext ctx{act, {gl.threads}, {gl.assume_connected}};
  auto v = full_verdict(*in.h, ctx);
  auto full = FieldModule::full(act);
  auto quotient = FieldModule::quotient(act, *in.h);
  r.result["verdict"] = verdict_name(v.verdict);
  r.result["conclusive"] = v.conclusive;
  if (!v.conclusive)
    r.result["note"] = "no compatible left invariant grading exists; this does not decide splitness";
  r.result["sufficient_condition"] = sufficient_json(in.g, v.sufficient);
  r.result["effectiveness"] = {{"largest_ideal_in_h", subspace_json(in.g, v.sufficient.effectiveness_ideal)},
                               {"effective", v.sufficient.effective}};
  r.result["solutions"] = v.solutions ? solution_json(quotient, full, *v.solutions) : Json(nullptr);
  r.result["witness"] = v.witness ? field_json(full, *v.witness) : Json(nullptr);
  return r;
}

ReportDocument cmd_strict(const Source& src, const Global& gl) {
  auto in = load(src, true);
  require_algebra(in.g);
  require_valid(*in.h);
  ReportDocument r{"strict-invariance", in.echo, {}, assumptions(gl)};
  auto act = std::make_shared<const ExteriorAction>(in.g);
  auto full = FieldModule::full(act);
  auto s = strict_invariance_solve(full, *in.h, {gl.threads});
  r.result["solutions"] = solution_json(full, full, s);
  return r;
}

void add_source(CLI::App* app, Source& src, bool with_h) {
  app->add_option("--algebra", src.algebra_file, "Algebra document (JSON)");
  app->add_option("--catalog", src.catalog, "Built-in algebra: gl:m,n | osp12 | abelian:even,odd");
  if (!with_h) return;
  app->add_option("--subalgebra", src.subalgebra_file, "Subalgebra document (JSON); default h = 0");
  app->add_option("--parabolic", src.parabolic, "Parabolic flag r,s of a catalog gl:m,n");
  app->add_option("--h-labels", src.h_labels, "h spanned by these basis labels (comma separated)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitness checks for homogeneous superspaces G/H given by Lie superalgebra data"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--assume-connected,!--no-assume-connected", gl.assume_connected,
               "Treat G0 and H0 as connected (default on)");
  app.add_option("--threads", gl.threads, "Worker threads for system assembly")->check(CLI::Range(1u, 256u));
  app.set_version_flag("--version", kToolVersion);

  Source src;
  std::string word, op = "normal", space = "quotient", degrees, parity = "even", invariance = "h";
  std::string catalog_parabolic_flag;

  auto* c_catalog = app.add_subcommand("catalog", "Print a built-in algebra or parabolic subalgebra document");
  c_catalog->add_option("--catalog", src.catalog, "gl:m,n | osp12 | abelian:even,odd")->required();
  c_catalog->add_option("--parabolic", catalog_parabolic_flag, "Print the parabolic subalgebra r,s instead");
  auto* c_validate = app.add_subcommand("validate", "Check superalgebra axioms (and subalgebra closure)");
  add_source(c_validate, src, true);
  auto* c_gr = app.add_subcommand("gr", "Associated graded superalgebra");
  add_source(c_gr, src, false);
  auto* c_env = app.add_subcommand("envelope", "PBW computations on a word of generators");
  add_source(c_env, src, false);
  c_env->add_option("--word", word, "Comma separated basis labels")->required();
  c_env->add_option("--op", op, "normal | gamma | antipode | decompose");
  auto* c_inv = app.add_subcommand("invariants", "Invariant fields in the exterior module");
  add_source(c_inv, src, true);
  c_inv->add_option("--space", space, "full | quotient");
  c_inv->add_option("--degrees", degrees, "Exterior degrees to keep (comma separated; default all)");
  c_inv->add_option("--parity", parity, "even | odd | any");
  c_inv->add_option("--invariance", invariance, "h | h0");
  auto* c_ranks = app.add_subcommand("ranks", "Ranks of the split model");
  add_source(c_ranks, src, true);
  auto* c_split = app.add_subcommand("split-check", "Full splitness verdict for G/H");
  add_source(c_split, src, true);
  auto* c_strict = app.add_subcommand("strict-invariance", "Grading operators invariant under all of h");
  add_source(c_strict, src, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_catalog->parsed()) {
      auto cat = parse_catalog(src.catalog);
      auto g = catalog_algebra(cat);
      if (catalog_parabolic_flag.empty()) {
        std::cout << print_algebra_document(AlgebraDocument::from_algebra(g));
      } else {
        if (cat.name != "gl") throw InputError("--parabolic needs a gl catalog algebra");
        auto rs = parse_naturals(catalog_parabolic_flag, 2, "--parabolic");
        auto h = catalog_parabolic(g, cat.params[0], cat.params[1], rs[0], rs[1]);
        std::cout << print_subalgebra_document(SubalgebraDocument::from_embedding(h));
      }
      return 0;
    }
    ReportDocument r;
    if (c_validate->parsed()) r = cmd_validate(src, gl);
    else if (c_gr->parsed()) r = cmd_gr(src, gl);
    else if (c_env->parsed()) r = cmd_envelope(src, gl, word, op);
    else if (c_inv->parsed()) r = cmd_invariants(src, gl, space, degrees, parity, invariance);
    else if (c_ranks->parsed()) r = cmd_ranks(src, gl);
    else if (c_split->parsed()) r = cmd_split_check(src, gl);
    else r = cmd_strict(src, gl);
    std::cout << (gl.format == "human" ? render_human(r) : print_report(r));
    return 0;
  } catch (const InputError& e) {
    std::cerr << "liesplit: input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "liesplit: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "liesplit: internal error: " << e.what() << "\n";
    return 3;
  }
}
