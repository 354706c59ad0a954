// Copyright 2026 The rbgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbg/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rbg/gallery.h"
#include "rbg/instance_io.h"
#include "testing/random_instances.h"

namespace rbg {
namespace {

using nlohmann::json;

constexpr char kRestrictedMachines[] = R"({
  "version": "rbg-instance/1",
  "resources": [
    {"id": "e", "cost": {"table": [0, 3, 4]}},
    {"id": "f", "cost": {"table": [0, 2, 4]}}
  ],
  "players": [
    {"id": "1", "strategy": {"kind": "free", "ground": ["e"]}},
    {"id": "2", "strategy": {"kind": "uniform", "rank": 1,
                             "ground": ["e", "f"]}}
  ]
})";

class CliTest : public ::testing::Test {
 protected:
  std::string Write(const std::string& name, const std::string& text) {
    const std::filesystem::path dir =
        std::filesystem::path(::testing::TempDir()) / "rbg_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  json Output() const { return json::parse(out_.str()); }

  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveMatroidOnRestrictedMachines) {
  const std::string inst = Write("machines.json", kRestrictedMachines);
  ASSERT_EQ(Run({"solve", inst, "--method", "matroid", "--trace"}), kExitOk)
      << err_.str();
  json report = Output();
  EXPECT_EQ(report["verdict"], "PNE");
  EXPECT_EQ(report["profile"][0]["payments"]["e"], "3");
  EXPECT_EQ(report["profile"][1]["payments"]["e"], "1");
  EXPECT_EQ(report["trace"].size(), 2u);
  EXPECT_EQ(report["instance_digest"],
            InstanceDigest(InstanceFromJson(json::parse(kRestrictedMachines))));

  const std::string rep = Write("machines_report.json", out_.str());
  ASSERT_EQ(Run({"verify", inst, rep}), kExitOk) << err_.str();
  EXPECT_EQ(Output()["verdict"], "PNE");
  ASSERT_EQ(Run({"verify", inst, rep, "--mode", "exchange"}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "PNE");
}

TEST_F(CliTest, ExitCodes) {
  const std::string inst = Write("machines.json", kRestrictedMachines);
  EXPECT_EQ(Run({"solve", inst, "--method", "sequential"}),
            kExitUnsupportedClass);
  EXPECT_EQ(Run({"solve", Write("broken.json", "{"), "--method",
                 "matroid"}),
            kExitInputError);
  EXPECT_EQ(Run({"solve", "/nonexistent/instance.json", "--method",
                 "matroid"}),
            kExitInputError);
  EXPECT_EQ(Run({"solve", inst, "--method", "bogus"}), kExitInputError);
  EXPECT_EQ(Run({"frobnicate"}), kExitInputError);

  json weighted = json::parse(kRestrictedMachines);
  weighted["players"][0]["demand"] = 2;
  weighted["resources"][0]["cost"]["table"] = {0, 3, 4, 5};
  weighted["resources"][1]["cost"]["table"] = {0, 2, 4, 6};
  EXPECT_EQ(Run({"solve", Write("weighted.json", weighted.dump()), "--method",
                 "matroid"}),
            kExitUnsupportedClass);

  json big = InstanceToJson(testing::RandomUnweightedMatroidGame(3));
  for (int k = 0; k < 4; ++k) {
    json p = big["players"][0];
    p["id"] = "extra" + std::to_string(k);
    big["players"].push_back(p);
  }
  for (json& r : big["resources"]) {
    json table = r["cost"]["table"];
    while (table.size() < 16) table.push_back(table.back());
    r["cost"]["table"] = table;
  }
  const std::string big_path = Write("big.json", big.dump());
  EXPECT_EQ(Run({"exists", big_path}), kExitCapacity) << err_.str();
}

TEST_F(CliTest, ExistsOnGallery) {
  ASSERT_EQ(Run({"gallery", "fig1a"}), kExitOk);
  const std::string fig = Write("fig1a.json", out_.str());
  ASSERT_EQ(Run({"exists", fig}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "no PNE");
  EXPECT_EQ(Output()["profiles_checked"], 8);

  ASSERT_EQ(Run({"gallery", "fig1a", "--M", "1"}), kExitOk);
  const std::string cheap = Write("fig1a_cheap.json", out_.str());
  ASSERT_EQ(Run({"exists", cheap}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "PNE exists");
  const std::string witness = Write("witness.json", out_.str());
  ASSERT_EQ(Run({"verify", cheap, witness}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "PNE");

  ASSERT_EQ(Run({"gallery", "diamond"}), kExitOk);
  const std::string diamond = Write("diamond.json", out_.str());
  ASSERT_EQ(Run({"exists", diamond}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "no PNE");
}

TEST_F(CliTest, NonmatroidGalleryAndMatroidCheck) {
  const std::string family = Write("family.json", R"([["1","2"],["3"]])");
  ASSERT_EQ(Run({"matroid-check", "--antichain", family}), kExitOk);
  EXPECT_EQ(Output()["is_matroid"], false);
  const std::string good = Write("good.json", R"([["a","b"],["b","c"]])");
  ASSERT_EQ(Run({"matroid-check", "--antichain", good}), kExitOk);
  EXPECT_EQ(Output()["is_matroid"], true);
  EXPECT_EQ(Run({"gallery", "nonmatroid", "--antichain", good}),
            kExitInputError);

  ASSERT_EQ(Run({"gallery", "nonmatroid", "--antichain", family}), kExitOk);
  const std::string game = Write("nonmatroid.json", out_.str());
  EXPECT_EQ(InstanceFromJson(json::parse(out_.str())),
            BuildNoPneGame({{"1", "2"}, {"3"}}));
  ASSERT_EQ(Run({"exists", game}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "no PNE");
}

TEST_F(CliTest, SupportFindsPayments) {
  const std::string inst = Write("machines.json", kRestrictedMachines);
  const std::string prof = Write("profile.json", R"([
    {"player": "1", "configuration": ["e"]},
    {"player": "2", "configuration": ["e"]}
  ])");
  ASSERT_EQ(Run({"support", inst, prof}), kExitOk) << err_.str();
  json report = Output();
  EXPECT_EQ(report["supportable"], true);
  EXPECT_EQ(report["verdict"], "supportable");
  const std::string rep = Write("support_report.json", out_.str());
  ASSERT_EQ(Run({"verify", inst, rep}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "PNE");

  const std::string fig = Write("fig1a.json", InstanceToJson(Fig1a()).dump());
  const std::string split = Write("split.json", R"([
    {"player": "1", "configuration": ["e"]},
    {"player": "2", "configuration": ["e"]},
    {"player": "3", "configuration": ["f"]}
  ])");
  ASSERT_EQ(Run({"support", fig, split}), kExitOk);
  EXPECT_EQ(Output()["verdict"], "unsupportable");
}

TEST_F(CliTest, VerifyRejectsForeignReports) {
  const std::string inst = Write("machines.json", kRestrictedMachines);
  ASSERT_EQ(Run({"solve", inst, "--method", "matroid"}), kExitOk);
  const std::string rep = Write("report.json", out_.str());
  const std::string fig = Write("fig1a.json", InstanceToJson(Fig1a()).dump());
  EXPECT_EQ(Run({"verify", fig, rep}), kExitInputError);
}

// Every report the solvers emit must re-verify through the verify command.
TEST_F(CliTest, ReportsAreSelfVerifying) {
  struct Case {
    GameInstance game;
    std::vector<std::string> methods;
  };
  std::vector<Case> cases;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    cases.push_back({testing::RandomUnweightedMatroidGame(seed), {"matroid"}});
    cases.push_back({testing::RandomWeightedMatroidGame(
                         seed, testing::CostFamily::kNonIncreasing),
                     {"optimal-support"}});
    cases.push_back({testing::RandomNetworkGame(seed),
                     {"sequential", "marginal-pricing"}});
  }
  for (const Case& c : cases) {
    const std::string inst = Write("case.json", InstanceToJson(c.game).dump());
    for (const std::string& method : c.methods) {
      const int code =
          Run({"solve", inst, "--method", method, "--seed", "7"});
      if (code == kExitCapacity) continue;
      ASSERT_EQ(code, kExitOk) << method << ": " << err_.str();
      const std::string rep = Write("case_report.json", out_.str());
      ASSERT_EQ(Run({"verify", inst, rep, "--mode", "general"}), kExitOk);
      EXPECT_EQ(Output()["verdict"], "PNE") << method;
    }
  }
}

TEST_F(CliTest, OutputIsDeterministic) {
  const GameInstance g = testing::RandomNetworkGame(4);
  const std::string inst = Write("net.json", InstanceToJson(g).dump());
  ASSERT_EQ(Run({"solve", inst, "--method", "sequential", "--seed", "3"}),
            kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run({"solve", inst, "--method", "sequential", "--seed", "3"}),
            kExitOk);
  EXPECT_EQ(out_.str(), first);
}

}  // namespace
}  // namespace rbg
