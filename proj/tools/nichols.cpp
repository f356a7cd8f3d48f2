// nichols: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 usage or argument error, 2 parse error, 3 validation
// failure, 4 undecided at cutoff, 5 resource bound, 6 golden mismatch,
// 7 internal error.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nichols/nichols_c.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGolden = 6;

std::string golden_name(const std::string& cmd, const std::vector<std::string>& args, nb_format f) {
  std::string name = cmd;
  for (const auto& a : args) name += "-" + a;
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
  return name + (f == NB_FORMAT_JSON ? ".json" : ".txt");
}

int status_exit(nb_status st) { return st == NB_ERR_ARGUMENT ? kExitUsage : static_cast<int>(st); }

int compare_golden(const std::string& dir, const std::string& name, const std::string& text, bool update) {
  const std::string path = dir + "/" + name;
  if (update) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitUsage;
    }
    out << text;
    std::cerr << "updated " << path << "\n";
    return 0;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "golden mismatch: " << path << " is missing\n";
    return kExitGolden;
  }
  std::ostringstream os;
  os << in.rdbuf();
  if (os.str() != text) {
    std::cerr << "golden mismatch: " << path << "\n";
    return kExitGolden;
  }
  std::cerr << "golden ok: " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nichols algebras, reflections and Weyl groupoids over twisted Yetter-Drinfeld categories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nb_version()));

  std::string session_path;
  std::string format = "text";
  std::string golden_dir;
  bool update_golden = false;
  app.add_option("-s,--session", session_path, "session file (JSON)")->required();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--golden", golden_dir, "compare output with DIR/<session>/<command>-<args>.<ext>");
  app.add_flag("--update-golden", update_golden, "write the golden file instead of comparing")->needs("--golden");

  std::string target;
  std::optional<unsigned> max_degree;
  std::optional<int> bound;
  unsigned i = 0;
  unsigned j = 0;

  auto* validate = app.add_subcommand("validate", "check the cocycle and every module");
  auto* nichols = app.add_subcommand("nichols", "graded dimensions of a Nichols algebra");
  nichols->add_option("target", target, "module, tuple, or comma-separated modules")->required();
  nichols->add_option("--max-degree", max_degree, "truncation degree (session default otherwise)");
  auto* ad = app.add_subcommand("ad", "levels ad(M_i)^n(M_j)");
  ad->add_option("tuple", target)->required();
  ad->add_option("i", i)->required();
  ad->add_option("j", j)->required();
  auto* cartan = app.add_subcommand("cartan", "generalized Cartan matrix");
  cartan->add_option("tuple", target)->required();
  auto* reflect = app.add_subcommand("reflect", "reflection R_i as module stanzas");
  reflect->add_option("tuple", target)->required();
  reflect->add_option("i", i)->required();
  auto* graph = app.add_subcommand("graph", "semi-Cartan graph as DOT with an axioms report");
  graph->add_option("tuple", target)->required();
  auto* roots = app.add_subcommand("roots", "real roots at the base vertex");
  roots->add_option("tuple", target)->required();
  roots->add_option("--bound", bound, "coefficient bound (session default otherwise)");
  auto* certify = app.add_subcommand("certify", "infinite-dimensionality certificate");
  certify->add_option("tuple", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  nb_session* s = nullptr;
  nb_status st = nb_session_open_file(session_path.c_str(), &s);
  if (st != NB_OK) {
    std::cerr << "error: " << nb_last_error() << "\n";
    return status_exit(st);
  }

  const nb_format f = format == "json" ? NB_FORMAT_JSON : NB_FORMAT_TEXT;
  char* out = nullptr;
  int passed = 1;
  std::string cmd;
  std::vector<std::string> args;
  if (*validate) {
    cmd = "validate";
    st = nb_validate(s, f, &passed, &out);
  } else if (*nichols) {
    const unsigned n = max_degree.value_or(nb_session_truncation(s));
    cmd = "nichols";
    args = {target, std::to_string(n)};
    st = nb_nichols(s, target.c_str(), n, f, &out);
  } else if (*ad) {
    cmd = "ad";
    args = {target, std::to_string(i), std::to_string(j)};
    st = nb_ad(s, target.c_str(), i, j, f, &out);
  } else if (*cartan) {
    cmd = "cartan";
    args = {target};
    st = nb_cartan(s, target.c_str(), f, &out);
  } else if (*reflect) {
    cmd = "reflect";
    args = {target, std::to_string(i)};
    st = nb_reflect(s, target.c_str(), i, f, &out);
  } else if (*graph) {
    cmd = "graph";
    args = {target};
    st = nb_graph(s, target.c_str(), f, &out);
  } else if (*roots) {
    const int b = bound.value_or(nb_session_root_bound(s));
    cmd = "roots";
    args = {target, std::to_string(b)};
    st = nb_roots(s, target.c_str(), b, f, &out);
  } else if (*certify) {
    cmd = "certify";
    args = {target};
    st = nb_certify(s, target.c_str(), f, &out);
  }
  nb_session_close(s);

  if (st != NB_OK) {
    std::cerr << "error: " << nb_last_error() << "\n";
    return status_exit(st);
  }
  const std::string text = out ? out : "";
  nb_string_free(out);

  int rc = 0;
  if (!golden_dir.empty()) {
    const std::string stem = std::filesystem::path(session_path).stem().string();
    rc = compare_golden(golden_dir, stem + "/" + golden_name(cmd, args, f), text, update_golden);
  }
  else std::cout << text;
  if (rc != 0) return rc;
  return passed ? 0 : static_cast<int>(NB_ERR_VALIDATION);
}
