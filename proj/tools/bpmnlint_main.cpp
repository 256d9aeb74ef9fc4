// bpmnlint command line: check files, list rules, explain a rule.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpmnlint/engine.hpp"
#include "bpmnlint/xml_reader.hpp"

namespace {

using namespace bpmnlint;

struct CheckArgs {
  std::vector<std::string> paths;
  std::string format = "text";
  std::string config_path;
  std::string profile;
  std::vector<std::string> disable;
  std::vector<std::string> enable;
  std::string fail_on;
  bool summary = false;
  int workers = 1;
};

std::vector<std::string> split_ids(const std::vector<std::string>& args) {
  std::vector<std::string> ids;
  for (const std::string& arg : args) {
    size_t pos = 0;
    while (pos <= arg.size()) {
      size_t comma = arg.find(',', pos);
      if (comma == std::string::npos) comma = arg.size();
      std::string id = trimmed(arg.substr(pos, comma - pos));
      if (!id.empty()) ids.push_back(id);
      pos = comma + 1;
    }
  }
  return ids;
}

void apply_profile(LintConfig& config, const std::string& profile) {
  if (profile == "standard") {
    config.enabled_categories = {RuleCategory::FlowControl, RuleCategory::DataFlow};
  } else {
    config.enabled_categories = {RuleCategory::FlowControl, RuleCategory::DataFlow,
                                 RuleCategory::BestPractice};
  }
}

LintConfig build_config(const CheckArgs& args) {
  LintConfig config;
  std::string config_path = args.config_path;
  if (config_path.empty()) {
    const char* env = std::getenv("BPMNLINT_CONFIG");
    if (env != nullptr && *env != '\0') config_path = env;
  }
  if (!config_path.empty()) config = parse_config_file(config_path);
  if (!args.profile.empty()) apply_profile(config, args.profile);
  if (!args.fail_on.empty()) {
    config.fail_threshold = args.fail_on == "warning" ? Severity::Warning : Severity::Error;
  }
  for (const std::string& id : split_ids(args.disable)) {
    if (find_rule(id) == nullptr) throw ConfigError("unknown rule id: " + id);
    config.rule_overrides[id] = std::nullopt;
  }
  for (const std::string& id : split_ids(args.enable)) {
    const RuleDescriptor* d = find_rule(id);
    if (d == nullptr) throw ConfigError("unknown rule id: " + id);
    config.rule_overrides[id] = d->default_severity;
  }
  return config;
}

int run_check(const CheckArgs& args) {
  LintConfig config = build_config(args);

  std::vector<std::string> paths = args.paths;
  std::sort(paths.begin(), paths.end());

  std::vector<BpmnModel> models;
  models.reserve(paths.size());
  for (const std::string& path : paths) {
    auto result = parse_bpmn_file(path);
    if (auto* issue = std::get_if<ParseIssue>(&result)) {
      std::cerr << path << ":" << issue->line << ":" << issue->column
                << ": error: " << issue->message << "\n";
      return 2;
    }
    models.push_back(std::move(std::get<BpmnModel>(result)));
  }

  std::vector<const BpmnModel*> refs;
  refs.reserve(models.size());
  for (const BpmnModel& m : models) refs.push_back(&m);

  LintReport report = run_many(refs, config, args.workers);
  if (args.format == "json") {
    std::cout << report_to_json(report) << "\n";
  } else {
    std::cout << report_to_text(report, args.summary);
  }
  return report_fails(report, config.fail_threshold) ? 1 : 0;
}

int run_rules(const std::string& profile) {
  LintConfig config;
  if (!profile.empty()) apply_profile(config, profile);
  for (const RuleDescriptor& d : list_rules(config)) {
    std::cout << d.id << "  " << d.section << "  " << severity_name(d.default_severity) << "  "
              << category_name(d.category) << "  " << d.title << "\n";
  }
  return 0;
}

int run_explain(const std::string& rule_id) {
  RuleExplanation ex = explain_rule(rule_id);
  std::cout << ex.descriptor->id << " (section " << ex.descriptor->section << ", "
            << category_name(ex.descriptor->category) << ", default "
            << severity_name(ex.descriptor->default_severity) << ")\n\n"
            << ex.prose << "\n\n"
            << "Conforming: " << ex.conforming << "\n"
            << "Violating:  " << ex.violating << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BPMN 2.0 process-model linter"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Lint BPMN files");
  check->add_option("paths", check_args.paths, "BPMN files to lint")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--format", check_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--config", check_args.config_path, "Config file path");
  check->add_option("--profile", check_args.profile, "Rule profile")
      ->check(CLI::IsMember({"standard", "strict"}));
  check->add_option("--disable", check_args.disable, "Rule ids to disable (comma separated)");
  check->add_option("--enable", check_args.enable, "Rule ids to enable (comma separated)");
  check->add_option("--fail-on", check_args.fail_on, "Failure threshold")
      ->check(CLI::IsMember({"error", "warning"}));
  check->add_flag("--summary", check_args.summary, "Per-rule violation histogram only");
  check->add_option("--workers", check_args.workers, "Lint files with N worker threads")
      ->check(CLI::PositiveNumber);

  std::string rules_profile;
  CLI::App* rules = app.add_subcommand("rules", "List the rule catalog");
  rules->add_option("--profile", rules_profile, "Rule profile")
      ->check(CLI::IsMember({"standard", "strict"}));

  std::string explain_id;
  CLI::App* explain = app.add_subcommand("explain", "Explain one rule");
  explain->add_option("rule", explain_id, "Rule id, e.g. FC-58")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (rules->parsed()) return run_rules(rules_profile);
    if (explain->parsed()) return run_explain(explain_id);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownRuleError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
