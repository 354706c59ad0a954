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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbg/convex_pricing.h"
#include "rbg/equilibrium_lab.h"
#include "rbg/errors.h"
#include "rbg/gallery.h"
#include "rbg/instance_io.h"
#include "rbg/matroid_pne.h"
#include "rbg/support_charpay.h"

namespace rbg {
namespace {

using nlohmann::json;

json BaseReport(const GameInstance& game, const std::string& method) {
  return {{"version", kReportVersion},
          {"method", method},
          {"instance_digest", InstanceDigest(game)}};
}

json AuditToJson(const GameInstance& game, const VerificationReport& report) {
  json players = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    const PlayerAudit& a = report.players[i];
    players.push_back(
        {{"player", game.players[i].id},
         {"private_cost", a.current_cost.ToString()},
         {"best_response_cost", a.best_response_cost.ToString()},
         {"best_response", ResourceListToJson(game, a.best_response)},
         {"violation", a.violation}});
  }
  return players;
}

// Adds profile, audit, social cost and verdict; returns whether it is a PNE.
bool AddVerifiedProfile(const GameInstance& game, const StrategyProfile& sp,
                        VerifyMode mode, json& report) {
  VerificationReport audit = VerifyPne(game, sp, mode);
  report["profile"] = ProfileToJson(game, sp);
  report["players"] = AuditToJson(game, audit);
  report["social_cost"] = SocialCost(game, sp.config).ToString();
  report["verdict"] = audit.is_pne ? "PNE" : "not PNE";
  return audit.is_pne;
}

json TraceToJson(const GameInstance& game, const AlgorithmTrace& trace) {
  json out = json::array();
  for (const AlgorithmIteration& it : trace.iterations) {
    json dropped = json::array();
    for (int i : it.dropped) dropped.push_back(game.players[i].id);
    out.push_back({{"k", it.k},
                   {"cut", ResourceListToJson(game, it.cut)},
                   {"bottleneck", game.resources[it.bottleneck].id},
                   {"player", game.players[it.player].id},
                   {"bottleneck_weight", it.bottleneck_weight.ToString()},
                   {"payment", it.payment.ToString()},
                   {"next_marginal", it.next_marginal.ToString()},
                   {"dropped", dropped}});
  }
  return out;
}

InsertionOrder ResolveOrder(const GameInstance& game,
                            const std::vector<std::string>& ids,
                            std::optional<std::uint64_t> seed) {
  InsertionOrder order;
  if (!ids.empty()) {
    for (const std::string& id : ids) order.push_back(game.FindPlayer(id));
    ValidateOrder(game, order);
    return order;
  }
  order = DeclarationOrder(game);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

void Emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

struct SolveArgs {
  std::string instance;
  std::string method;
  std::vector<std::string> order;
  std::optional<std::uint64_t> seed;
  bool trace = false;
};

int RunSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const GameInstance game = InstanceFromJson(ReadJsonFile(args.instance));
  json report = BaseReport(game, args.method);
  StrategyProfile sp;
  if (args.method == "matroid") {
    MatroidPneResult result = SolveUnweightedMatroid(game, args.trace);
    sp = std::move(result.profile);
    if (args.trace) report["trace"] = TraceToJson(game, result.trace);
  } else if (args.method == "optimal-support") {
    sp = SolveWeightedMatroid(game);
    const DeltaTable table = ComputeDeltaTable(game, sp.config);
    json slack = json::object();
    const auto values = SupportSlack(game, sp.config, table);
    for (int e = 0; e < game.num_resources(); ++e) {
      if (values[e]) slack[game.resources[e].id] = values[e]->ToString();
    }
    report["fixed"] = ResourceListToJson(game, table.fixed.elements);
    report["support_slack"] = slack;
  } else {
    const InsertionOrder order = ResolveOrder(game, args.order, args.seed);
    sp = args.method == "marginal-pricing" ? PneByMarginalPricing(game, order)
                                           : SequentialInsertion(game, order);
    json ids = json::array();
    for (int i : order) ids.push_back(game.players[i].id);
    report["order"] = ids;
  }
  const bool ok = AddVerifiedProfile(game, sp, VerifyMode::kAuto, report);
  Emit(out, report);
  if (!ok) {
    err << "error: solver output failed verification\n";
    return kExitInputError;
  }
  return kExitOk;
}

const json& ProfileSection(const json& doc) {
  if (doc.is_array()) return doc;
  if (doc.is_object() && doc.contains("profile")) return doc["profile"];
  throw SchemaError("expected a profile list or a document with \"profile\"");
}

int RunVerify(const std::string& instance, const std::string& profile_path,
              const std::string& mode_name, std::ostream& out) {
  const GameInstance game = InstanceFromJson(ReadJsonFile(instance));
  const json doc = ReadJsonFile(profile_path);
  if (doc.is_object() && doc.contains("instance_digest") &&
      doc["instance_digest"] != InstanceDigest(game)) {
    throw InputError("report belongs to a different instance");
  }
  VerifyMode mode = VerifyMode::kAuto;
  if (mode_name == "general") mode = VerifyMode::kGeneral;
  if (mode_name == "exchange") mode = VerifyMode::kMatroidExchange;
  const StrategyProfile sp = ProfileFromJson(game, ProfileSection(doc));
  json report = BaseReport(game, "verify");
  AddVerifiedProfile(game, sp, mode, report);
  Emit(out, report);
  return kExitOk;
}

int RunSupport(const std::string& instance, const std::string& profile_path,
               std::ostream& out) {
  const GameInstance game = InstanceFromJson(ReadJsonFile(instance));
  StrategyProfile sp =
      ProfileFromJson(game, ProfileSection(ReadJsonFile(profile_path)));
  SupportabilityResult result = Supportable(game, sp.config);
  json report = BaseReport(game, "support");
  report["linear_systems"] = result.exhausted_disjuncts;
  report["constraints"] = result.num_constraints;
  if (result.payments) {
    sp.payments = std::move(*result.payments);
    AddVerifiedProfile(game, sp, VerifyMode::kGeneral, report);
  } else {
    json configs = json::array();
    for (int i = 0; i < game.num_players(); ++i) {
      configs.push_back(
          {{"player", game.players[i].id},
           {"configuration", ResourceListToJson(game, sp.config[i])}});
    }
    report["profile"] = configs;
  }
  report["supportable"] = result.payments.has_value();
  report["verdict"] = result.payments ? "supportable" : "unsupportable";
  Emit(out, report);
  return kExitOk;
}

int RunExists(const std::string& instance, std::ostream& out) {
  const GameInstance game = InstanceFromJson(ReadJsonFile(instance));
  ExistenceResult result = PneExistsExhaustive(game);
  json report = BaseReport(game, "exists");
  report["profiles_checked"] = result.profiles_checked;
  report["exists"] = result.exists;
  if (result.witness) {
    AddVerifiedProfile(game, *result.witness, VerifyMode::kGeneral, report);
  }
  report["verdict"] = result.exists ? "PNE exists" : "no PNE";
  Emit(out, report);
  return kExitOk;
}

struct GalleryArgs {
  std::string name;
  std::string antichain;
  std::string big_m = "100";
  bool safe_m = false;
};

int RunGallery(const GalleryArgs& args, std::ostream& out) {
  const Rational big_m = Rational::Parse(args.big_m);
  GameInstance game;
  if (args.name == "fig1a") {
    game = Fig1a(big_m);
  } else if (args.name == "diamond") {
    game = DiamondConnection();
  } else {
    if (args.antichain.empty()) {
      throw InputError("gallery nonmatroid needs --antichain");
    }
    game = BuildNoPneGame(FamilyFromJson(ReadJsonFile(args.antichain)),
                          {big_m, args.safe_m});
  }
  Emit(out, InstanceToJson(game));
  return kExitOk;
}

json ViolationToJson(const std::vector<std::string>& labels,
                     const ExchangeViolation& v) {
  auto names = [&](const ElementSet& s) {
    json a = json::array();
    for (ResourceIndex e : s) a.push_back(labels[e]);
    return a;
  };
  return {{"x_set", names(v.x_set)},
          {"y_set", names(v.y_set)},
          {"element", labels[v.element]}};
}

int RunMatroidCheck(const std::string& antichain, const std::string& instance,
                    std::ostream& out) {
  json report = {{"version", "rbg-matroid-check/1"}};
  if (!antichain.empty()) {
    const LabeledFamily lf =
        IndexFamily(FamilyFromJson(ReadJsonFile(antichain)));
    auto violation = ValidateExplicitBases(lf.sets);
    report["is_matroid"] = !violation.has_value();
    if (violation) report["violation"] = ViolationToJson(lf.labels, *violation);
  } else if (!instance.empty()) {
    const GameInstance game = InstanceFromJson(ReadJsonFile(instance));
    std::vector<std::string> labels;
    for (const Resource& r : game.resources) labels.push_back(r.id);
    json players = json::array();
    bool all = true;
    for (const Player& p : game.players) {
      json entry = {{"player", p.id}};
      if (std::holds_alternative<Matroid>(p.strategy)) {
        entry["is_matroid"] = true;
      } else if (const auto* a = std::get_if<ExplicitAntichain>(&p.strategy)) {
        auto violation = ValidateExplicitBases(a->sets);
        entry["is_matroid"] = !violation.has_value();
        if (violation) entry["violation"] = ViolationToJson(labels, *violation);
      } else {
        entry["is_matroid"] = false;
      }
      all = all && entry["is_matroid"].get<bool>();
      players.push_back(std::move(entry));
    }
    report["players"] = players;
    report["is_matroid"] = all;
  } else {
    throw InputError("matroid-check needs --antichain or --instance");
  }
  Emit(out, report);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Resource buying games: solve, verify and refute equilibria"};
  app.name("rbg");
  app.require_subcommand(1);

  SolveArgs solve;
  std::uint64_t seed = 0;
  CLI::App* solve_cmd = app.add_subcommand("solve", "compute an equilibrium");
  solve_cmd->add_option("instance", solve.instance, "instance file")
      ->required();
  solve_cmd->add_option("--method", solve.method)
      ->required()
      ->check(CLI::IsMember(
          {"matroid", "optimal-support", "marginal-pricing", "sequential"}));
  solve_cmd->add_option("--order", solve.order,
                        "comma-separated player ids (insertion order)")
      ->delimiter(',');
  CLI::Option* seed_opt = solve_cmd->add_option(
      "--seed", seed, "shuffle the insertion order when --order is absent");
  solve_cmd->add_flag("--trace", solve.trace, "include the algorithm trace");

  std::string instance, profile, mode = "auto";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "audit a profile with payments");
  verify_cmd->add_option("instance", instance)->required();
  verify_cmd->add_option("profile", profile, "report or profile file")
      ->required();
  verify_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"auto", "general", "exchange"}));

  CLI::App* support_cmd = app.add_subcommand(
      "support", "find payments that make a configuration profile a PNE");
  support_cmd->add_option("instance", instance)->required();
  support_cmd->add_option("profile", profile)->required();

  CLI::App* exists_cmd =
      app.add_subcommand("exists", "decide PNE existence exhaustively");
  exists_cmd->add_option("instance", instance)->required();

  GalleryArgs gallery;
  CLI::App* gallery_cmd =
      app.add_subcommand("gallery", "emit a named instance");
  gallery_cmd->add_option("name", gallery.name)
      ->required()
      ->check(CLI::IsMember({"fig1a", "diamond", "nonmatroid"}));
  gallery_cmd->add_option("--antichain", gallery.antichain,
                          "family file for nonmatroid");
  gallery_cmd->add_option("--M", gallery.big_m, "large cost (integer or p/q)");
  gallery_cmd->add_flag("--safe-m", gallery.safe_m,
                        "derive the large cost from the other costs");

  std::string antichain;
  CLI::App* check_cmd = app.add_subcommand(
      "matroid-check", "test families for the basis exchange property");
  CLI::Option* antichain_opt =
      check_cmd->add_option("--antichain", antichain, "family file");
  check_cmd->add_option("--instance", instance, "instance file")
      ->excludes(antichain_opt);

  std::vector<std::string> argv_storage = {"rbg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) {
      if (*seed_opt) solve.seed = seed;
      return RunSolve(solve, out, err);
    }
    if (verify_cmd->parsed()) return RunVerify(instance, profile, mode, out);
    if (support_cmd->parsed()) return RunSupport(instance, profile, out);
    if (exists_cmd->parsed()) return RunExists(instance, out);
    if (gallery_cmd->parsed()) return RunGallery(gallery, out);
    return RunMatroidCheck(antichain, instance, out);
  } catch (const UnsupportedClassError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupportedClass;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace rbg
