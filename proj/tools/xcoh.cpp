#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "xcoh/jobs.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

int emit(const xcoh::Doc& doc, const std::string& out) {
  const auto text = xcoh::render(doc);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "xcoh: cannot write " << out << "\n";
    return 1;
  }
  return 0;
}

int fail(const std::string& command, const std::string& kind, const std::string& message,
         const std::string& out, int code) {
  std::cerr << "xcoh: " << message << "\n";
  xcoh::Doc d;
  d["command"] = command;
  d["error"] = {{"kind", kind}, {"message", message}};
  emit(d, out);
  return code;
}

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("XCOH_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end || errno || v[0] == '-') throw std::invalid_argument(std::string("XCOH_BUDGET is not a count: ") + v);
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of gamma-crossed modules with coefficients in crossed modules"};
  std::string command, spec_path, out;
  std::optional<std::uint64_t> budget_flag;
  bool corrupt = false;
  app.add_option("command", command, "cohomology | verify | butterfly | les | selftest (default: [job] command)")
      ->check(CLI::IsMember({"cohomology", "verify", "butterfly", "les", "selftest"}));
  app.add_option("--spec", spec_path, "job specification file");
  app.add_option("--budget", budget_flag, "enumeration budget (else [job] budget, else XCOH_BUDGET, else 10^7)");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_flag("--corrupt-fixture", corrupt)->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  std::optional<std::uint64_t> budget_env;
  try {
    budget_env = env_budget();
  } catch (const std::exception& e) {
    return fail(command, "input", e.what(), out, kInputError);
  }

  try {
    if (command == "selftest") {
      xcoh::AcceptanceOptions o;
      o.budget = budget_flag.value_or(budget_env.value_or(xcoh::kDefaultBudget));
      o.corrupt_fixture = corrupt;
      auto run = xcoh::run_selftest(o);
      for (const auto& r : run.results)
        std::cerr << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
      if (emit(xcoh::acceptance_doc(run), out)) return kInputError;
      return run.ok() ? kOk : kVerifyFailed;
    }

    if (spec_path.empty())
      return fail(command, "input", "--spec is required" + (command.empty() ? "" : " for " + command), out,
                  kInputError);
    std::ifstream f(spec_path);
    if (!f) return fail(command, "input", "cannot open " + spec_path, out, kInputError);
    xcoh::JobSpec js;
    try {
      js = xcoh::parse_spec(f);
    } catch (const xcoh::ParseError& e) {
      return fail(command, "parse", spec_path + ":" + e.what(), out, kInputError);
    }
    if (command.empty()) command = js.command.value_or("");
    if (command.empty()) return fail(command, "input", "no command given on the command line or in [job]", out, kInputError);
    if (out.empty()) out = js.out.value_or("");
    const auto budget =
        budget_flag.value_or(js.budget.value_or(budget_env.value_or(xcoh::kDefaultBudget)));
    auto res = xcoh::run_job(command, js, budget);
    if (emit(res.doc, out)) return kInputError;
    return res.exit_code;
  } catch (const xcoh::BudgetError& e) {
    return fail(command, "budget", e.what(), out, kBudgetExceeded);
  } catch (const xcoh::InputError& e) {
    return fail(command, "input", e.what(), out, kInputError);
  } catch (const xcoh::PreconditionError& e) {
    return fail(command, "input", e.what(), out, kInputError);
  }
}
