#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nichols/weylgraph.hpp"

namespace nichols {

struct SessionCutoffs {
  std::size_t ad = 8;
  std::size_t truncation = 8;
  std::size_t vertices = 64;
  int roots = 50;
  std::size_t words = 1'000'000;
};

/// A parsed session file: group, cocycle, named modules and tuples, cutoffs.
///
/// Schema (JSON):
///   {"group": {"abelian": [2,2,2], "symbol": "h"} | {"cayley": [[...], ...]},
///    "cocycle": {"sign3": true} | {"trivial": true} | {"table": ["1", "-1", "zeta(4)^1", ...]},
///    "modules": {"W1": {"preset": "W1"},
///                "M": {"degrees": ["h1", "h1"], "action": {"h1": [[-1,0],[0,-1]], ...}, "labels": [...]}},
///    "tuples": {"W": ["W1", "W2", "W3"]},
///    "cutoffs": {"ad": 8, "truncation": 8, "vertices": 64, "roots": 50, "words": 1000000}}
/// Matrix entries are integers or strings in the cyclotomic syntax; an
/// action lists generators and is closed to the whole group.
class Session {
public:
  /// Throws ParseError on malformed JSON or schema violations.
  static Session parse(const std::string& json_text);
  static Session load_file(const std::string& path);

  const Group& group() const { return phi_->group(); }
  const CocyclePtr& cocycle() const noexcept { return phi_; }
  const SessionCutoffs& cutoffs() const noexcept { return cutoffs_; }

  /// Declared modules in file order.
  const std::vector<std::pair<std::string, YDModule>>& modules() const noexcept { return modules_; }
  const std::vector<std::pair<std::string, std::vector<std::string>>>& tuples() const noexcept { return tuples_; }

  /// Declared module, or a built-in preset. Throws std::invalid_argument if unknown.
  YDModule module(const std::string& name) const;
  /// Declared tuple, or a comma-separated list of module names.
  ModuleTuple tuple(const std::string& name) const;

  /// Cocycle check plus Yetter-Drinfeld checks of every module; problems
  /// found while building modules are reported here too.
  struct Validation {
    bool passed = true;
    std::vector<std::string> lines;
  };
  Validation validate() const;
  /// Throws ValidationError if validate() fails (cached).
  void require_valid() const;

private:
  CocyclePtr phi_;
  std::vector<std::pair<std::string, YDModule>> modules_;
  std::vector<std::pair<std::string, std::string>> module_errors_;
  std::vector<std::pair<std::string, std::vector<std::string>>> tuples_;
  SessionCutoffs cutoffs_;
  mutable std::shared_ptr<Validation> validation_;
};

enum class OutputFormat { Text, Json };

/// Command emitters. Indices are 1-based. Output is deterministic.
std::string command_validate(const Session& s, OutputFormat f, bool& passed);
std::string command_nichols(const Session& s, const std::string& target, std::size_t max_degree, OutputFormat f);
std::string command_ad(const Session& s, const std::string& tuple, std::size_t i, std::size_t j, OutputFormat f);
std::string command_cartan(const Session& s, const std::string& tuple, OutputFormat f);
std::string command_reflect(const Session& s, const std::string& tuple, std::size_t i, OutputFormat f);
std::string command_graph(const Session& s, const std::string& tuple, OutputFormat f);
std::string command_roots(const Session& s, const std::string& tuple, int bound, OutputFormat f);
std::string command_certify(const Session& s, const std::string& tuple, OutputFormat f);

}  // namespace nichols
