#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <crossed/cli.hpp>

using namespace crossed;
using namespace crossed::cli;

namespace {

const std::string data_dir = CROSSED_OPS_DATA;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_binary(const std::string& args) {
  const std::string cmd = std::string(CROSSED_OPS_BINARY) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("crossed_ops_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ResolveStructures) {
  EXPECT_EQ(resolve_structure("sym").crossed->order(3), 6u);
  EXPECT_EQ(resolve_structure("trivial").operad, OperadKind::trivial);
  EXPECT_FALSE(resolve_structure("braid").finite());
  const Structure c = resolve_structure("constant:" + data_dir + "/s3.grp");
  EXPECT_EQ(c.name, "constant(s3)");
  EXPECT_EQ(c.crossed->order(2), 6u);
  const Structure w = resolve_structure(data_dir + "/weyl.wspec");
  EXPECT_TRUE(same_crossed_group(*w.crossed, *weyl(), 3));
  EXPECT_THROW(resolve_structure("nonsense"), UsageError);
  EXPECT_THROW(resolve_structure("constant:/no/such/file"), UsageError);
  EXPECT_THROW(resolve_structure("constant:" + temp_file("bad.grp", "order 2\n0 1\n")), UsageError);
}

TEST(Cli, VerifyPassAndJson) {
  VerifyOptions opt;
  opt.structure = "sym";
  opt.max_degree = 2;
  opt.format = "json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opt, out, err), exit_pass);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("status"), "pass");
  ASSERT_EQ(j.at("reports").size(), 3u);
  for (const auto& r : j.at("reports")) {
    const Report back = Report::from_json(r);
    EXPECT_EQ(back.to_json(), r);
    EXPECT_TRUE(back.passed());
  }
}

TEST(Cli, VerifyViolationsAndUsage) {
  std::ostringstream out, err;
  VerifyOptions refl_opt;
  refl_opt.structure = "refl";
  refl_opt.checks = {"inert-action"};
  refl_opt.max_degree = 2;
  EXPECT_EQ(cmd_verify(refl_opt, out, err), exit_violation);
  EXPECT_NE(out.str().find("inert-action"), std::string::npos);
  VerifyOptions tame_opt;
  tame_opt.structure = "hyperoctahedral";
  tame_opt.checks = {"tame"};
  tame_opt.max_degree = 2;
  out.str("");
  EXPECT_EQ(cmd_verify(tame_opt, out, err), exit_violation);
  EXPECT_NE(out.str().find("over-sym"), std::string::npos);
  VerifyOptions bad_check;
  bad_check.structure = "sym";
  bad_check.checks = {"nope"};
  EXPECT_EQ(cmd_verify(bad_check, out, err), exit_usage);
  VerifyOptions bad_format;
  bad_format.structure = "sym";
  bad_format.format = "xml";
  EXPECT_EQ(cmd_verify(bad_format, out, err), exit_usage);
  VerifyOptions operad_check_on_group;
  operad_check_on_group.structure = "weyl";
  operad_check_on_group.checks = {"group-operad"};
  EXPECT_EQ(cmd_verify(operad_check_on_group, out, err), exit_usage);
}

TEST(Cli, VerifySampledAboveDegreeThree) {
  VerifyOptions opt;
  opt.structure = "weyl";
  opt.max_degree = 5;
  opt.samples = 50;
  opt.seed = 9;
  opt.format = "json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opt, out, err), exit_pass);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("reports").at(0).at("mode"), "sampled");
}

TEST(Cli, BraidVerify) {
  VerifyOptions opt;
  opt.structure = "braid";
  opt.samples = 60;
  opt.seed = 7;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opt, out, err), exit_pass) << out.str();
  EXPECT_NE(out.str().find("sampled"), std::string::npos);
  opt.checks = {"operadic"};
  EXPECT_EQ(cmd_verify(opt, out, err), exit_usage);
}

TEST(Cli, Quotient) {
  QuotientOptions opt;
  opt.structure = "constant:" + data_dir + "/s3.grp";
  opt.kind = "operadify";
  opt.format = "json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_quotient(opt, out, err), exit_pass);
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.at("tables").size(), 4u);
  for (const auto& t : j.at("tables")) EXPECT_EQ(t.at("order"), 2);
  EXPECT_EQ(j.at("reports").at(0).at("status"), "truncated");
  opt.kind = "tame";
  opt.format = "text";
  out.str("");
  EXPECT_EQ(cmd_quotient(opt, out, err), exit_pass);
  EXPECT_NE(out.str().find("quotient orders: 0:2 1:2 2:2 3:2"), std::string::npos) << out.str();
  opt.structure = "braid";
  EXPECT_EQ(cmd_quotient(opt, out, err), exit_usage);
  opt.structure = "hyperoctahedral";
  opt.max_degree = 2;
  EXPECT_EQ(cmd_quotient(opt, out, err), exit_violation);
  opt.kind = "other";
  EXPECT_EQ(cmd_quotient(opt, out, err), exit_usage);
}

TEST(Cli, Hochschild) {
  HochschildOptions opt;
  opt.algebra = data_dir + "/dual_numbers.alg";
  opt.top = 4;
  opt.check_oracle = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_pass);
  EXPECT_EQ(out.str(), "0:2 1:1 2:1 3:1 4:1\noracle: match\n");
  opt.algebra = data_dir + "/m2.alg";
  opt.top = 3;
  out.str("");
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_pass);
  EXPECT_EQ(out.str(), "0:1 1:0 2:0 3:0\noracle: match\n");
  opt.algebra = data_dir + "/ground_field.alg";
  opt.top = 1;
  opt.check_oracle = false;
  opt.format = "json";
  opt.dump_boundaries = true;
  out.str("");
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_pass);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("homology_dims"), (std::vector<int>{1, 0}));
  EXPECT_EQ(j.at("boundaries").size(), 2u);
  opt.algebra = temp_file("bad.alg", "dim 1\nunit 1\nmul 0 0 0 2\n");
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_usage);
  opt.algebra = "/no/such/algebra";
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_usage);
  opt.algebra = data_dir + "/ground_field.alg";
  opt.zmap = "other";
  EXPECT_EQ(cmd_hochschild(opt, out, err), exit_usage);
}

TEST(Cli, Maps) {
  MapsOptions opt;
  opt.source = "sym";
  opt.target = "weyl";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_maps(opt, out, err), exit_pass);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "count 1 (consistent up to degree 3)");
  opt.format = "json";
  out.str("");
  EXPECT_EQ(cmd_maps(opt, out, err), exit_pass);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("count"), 1);
  EXPECT_EQ(j.at("families").at(0).size(), 4u);
  opt.target = "braid";
  EXPECT_EQ(cmd_maps(opt, out, err), exit_usage);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("verify --structure sym --max-degree 2").code, 0);
  EXPECT_EQ(run_binary("verify --structure refl --check inert-action --max-degree 2").code, 1);
  EXPECT_EQ(run_binary("verify --structure nonsense").code, 2);
  EXPECT_EQ(run_binary("verify").code, 2);
  EXPECT_EQ(run_binary("").code, 2);
  EXPECT_EQ(run_binary("verify --structure sym --max-degree x").code, 2);
  EXPECT_EQ(run_binary("frobnicate").code, 2);
  EXPECT_EQ(run_binary("hochschild --algebra /no/such/file").code, 2);
  EXPECT_EQ(run_binary("--help").code, 0);
  const RunResult h = run_binary("hochschild --algebra " + data_dir + "/dual_numbers.alg --top 4");
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "0:2 1:1 2:1 3:1 4:1\n");
  const RunResult m = run_binary("maps --source sym --target sym --max-degree 3");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "count 1 (consistent up to degree 3)");
}
