#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "common.hpp"

using namespace liesplit;
using namespace testing_support;

TEST(Document, AlgebraRoundTrip) {
  Rng rng(91);
  auto algebras = catalog_algebras();
  algebras.push_back(gl11_abxy());
  algebras.push_back(gr_superalgebra(catalog_osp12()));
  for (const auto& g : algebras) {
    auto doc = AlgebraDocument::from_algebra(g);
    doc.metadata = Json{{"source", "test"}};
    auto text = print_algebra_document(doc);
    auto back = parse_algebra_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(print_algebra_document(back), text);
    EXPECT_EQ(back.to_algebra(), g);
  }
}

TEST(Document, AsymmetricTablesSurvive) {
  auto g = AlgebraBuilder("odd").even("a").even("b")
               .bracket("a", "b", {{"a", 1}})
               .bracket("b", "a", {{"a", 1}})
               .build();
  auto doc = AlgebraDocument::from_algebra(g);
  EXPECT_EQ(parse_algebra_document(print_algebra_document(doc)).to_algebra(), g);
}

TEST(Document, SubalgebraRoundTrip) {
  Rng rng(92);
  for (const auto& g : catalog_algebras()) {
    auto h = random_subalgebra(rng, g, false);
    auto doc = SubalgebraDocument::from_embedding(h);
    auto back = parse_subalgebra_document(print_subalgebra_document(doc));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(back.to_embedding(g).vectors(), h.vectors());
  }
  SubalgebraDocument dense;
  dense.vectors.emplace_back(Vector{1, Scalar(1, 2), 0, 0});
  auto back = parse_subalgebra_document(print_subalgebra_document(dense));
  EXPECT_EQ(back, dense);
  EXPECT_EQ(back.to_embedding(gl11_abxy()).vectors()[0], (Vector{1, Scalar(1, 2), 0, 0}));
}

TEST(Document, ReportRoundTrip) {
  ReportDocument r{"split-check", Json{{"algebra", "gl(1|1)"}}, Json{{"verdict", "X"}, {"ranks", {1, 2}}},
                   Json{{"connected_groups", true}}};
  EXPECT_EQ(parse_report(print_report(r)), r);
}

TEST(Document, InputErrors) {
  EXPECT_THROW(parse_algebra_document("{"), InputError);
  EXPECT_THROW(parse_algebra_document(R"({"name":"x","basis":[{"label":"a","parity":2}]})"), InputError);
  EXPECT_THROW(parse_algebra_document(R"({"name":"x","basis":[{"label":"a","parity":0},{"label":"a","parity":1}]})"),
               InputError);
  EXPECT_THROW(parse_algebra_document(
                   R"({"name":"x","basis":[{"label":"a","parity":0}],"brackets":[{"left":"a","right":"q","result":[]}]})"),
               InputError);
  EXPECT_THROW(parse_algebra_document(
                   R"({"name":"x","basis":[{"label":"a","parity":0}],"brackets":[{"left":"a","right":"a","result":[["a","0.5"]]}]})"),
               InputError);
  auto g = gl11_abxy();
  EXPECT_THROW(parse_subalgebra_document(R"({"vectors":[["1","0"]]})").to_embedding(g), InputError);
  EXPECT_THROW(parse_subalgebra_document(R"({"vectors":[[["zz","1"]]]})").to_embedding(g), InputError);
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LIESPLIT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(LIESPLIT_BINARY_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const std::string kFixtures = LIESPLIT_SOURCE_DIR "/tests/fixtures/";

}  // namespace

TEST(Cli, OrdinaryLieGroupVerdict) {
  auto r = run("split-check --algebra " + kFixtures + "gl11.json --subalgebra " + kFixtures + "gl11_even.json");
  ASSERT_EQ(r.code, 0);
  auto rep = parse_report(r.out);
  EXPECT_EQ(rep.result["verdict"], "SPLIT_BY_SUFFICIENT_CONDITION");
  EXPECT_EQ(rep.assumptions["connected_groups"], true);
}

TEST(Cli, SuperGrassmannianVerdict) {
  auto r = run("split-check --algebra " + kFixtures + "gl22.json --subalgebra " + kFixtures + "gl22_p11.json");
  ASSERT_EQ(r.code, 0);
  auto rep = parse_report(r.out);
  EXPECT_EQ(rep.result["verdict"], "NO_COMPATIBLE_LEFT_INVARIANT_GRADING");
  EXPECT_EQ(rep.result["conclusive"], false);
  EXPECT_EQ(rep.result["solutions"]["feasible"], false);
}

TEST(Cli, UnknownLabelIsInputError) {
  auto path = write_temp("bad_label.json",
                         R"({"name":"x","basis":[{"label":"a","parity":0}],)"
                         R"("brackets":[{"left":"a","right":"zz","result":[["a","1"]]}]})");
  EXPECT_EQ(run("validate --algebra " + path).code, 2);
}

TEST(Cli, OtherInputErrors) {
  EXPECT_EQ(run("validate --algebra /nonexistent.json").code, 2);
  EXPECT_EQ(run("validate --catalog nope").code, 2);
  EXPECT_EQ(run("split-check --catalog gl:2,2 --parabolic 3,0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--format xml validate --catalog osp12").code, 2);
  auto bad_h = write_temp("bad_h.json", R"({"vectors":[[["E12","1"]],[["E21","1"]]]})");
  EXPECT_EQ(run("split-check --catalog gl:1,1 --subalgebra " + bad_h).code, 2);
}

TEST(Cli, Subcommands) {
  auto v = run("validate --catalog osp12");
  ASSERT_EQ(v.code, 0);
  EXPECT_EQ(parse_report(v.out).result["algebra"]["valid"], true);

  auto gr = run("gr --catalog gl:1,1");
  ASSERT_EQ(gr.code, 0);
  EXPECT_EQ(parse_report(gr.out).result["valid"], true);

  auto env = run("envelope --algebra " + kFixtures + "gl11_abxy.json --word y,x --op normal");
  ASSERT_EQ(env.code, 0);
  EXPECT_EQ(parse_report(env.out).result["element"]["text"], "(1)*b + (1)*a + (-1)*x*y");
  auto gm = run("envelope --algebra " + kFixtures + "gl11_abxy.json --word x,y --op gamma");
  EXPECT_EQ(parse_report(gm.out).result["gamma"]["text"], "(-1/2)*b + (-1/2)*a + (1)*x*y");
  auto gm2 = run("envelope --algebra " + kFixtures + "gl11_abxy.json --word y,x --op gamma");
  EXPECT_EQ(parse_report(gm2.out).result["gamma"]["text"], "(1/2)*b + (1/2)*a + (-1)*x*y");
  auto ap = run("envelope --algebra " + kFixtures + "gl11_abxy.json --word x,y --op antipode");
  EXPECT_EQ(parse_report(ap.out).result["antipode"]["text"], "(-1)*b + (-1)*a + (1)*x*y");
  EXPECT_EQ(run("envelope --algebra " + kFixtures + "gl11_abxy.json --word x,q").code, 2);

  auto ranks = run("ranks --catalog gl:2,2 --parabolic 1,1");
  ASSERT_EQ(ranks.code, 0);
  EXPECT_EQ(parse_report(ranks.out).result["total"], 4);

  auto inv = run("invariants --catalog gl:1,1 --h-labels E11,E22 --degrees 1 --parity even");
  ASSERT_EQ(inv.code, 0);
  EXPECT_GE(parse_report(inv.out).result["dimension"].get<int>(), 1);

  auto strict = run("strict-invariance --catalog gl:1,1 --h-labels E11,E22,E12");
  ASSERT_EQ(strict.code, 0);
  EXPECT_EQ(parse_report(strict.out).result["solutions"]["feasible"], false);

  auto human = run("--format human split-check --catalog gl:1,1 --h-labels E11,E22");
  ASSERT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("verdict: SPLIT_BY_SUFFICIENT_CONDITION"), std::string::npos);

  auto nc = run("--no-assume-connected split-check --catalog gl:1,1");
  EXPECT_EQ(parse_report(nc.out).assumptions["connected_groups"], false);
}

TEST(Cli, CatalogDocumentsParse) {
  auto a = run("catalog --catalog gl:2,1");
  ASSERT_EQ(a.code, 0);
  auto g = parse_algebra_document(a.out).to_algebra();
  EXPECT_EQ(g, catalog_gl(2, 1));
  auto h = run("catalog --catalog gl:2,1 --parabolic 1,0");
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(parse_subalgebra_document(h.out).to_embedding(g).vectors(), catalog_parabolic(g, 2, 1, 1, 0).vectors());
}

TEST(Cli, Deterministic) {
  std::string args = "split-check --algebra " + kFixtures + "gl22.json --subalgebra " + kFixtures + "gl22_p11.json";
  auto a = run(args), b = run(args), c = run("--threads 4 " + args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}
