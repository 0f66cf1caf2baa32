#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vss/cli.hpp"

namespace vss::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;  // without the program name
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"mul_sign", {"mul", "-q", "2", "xi2", "xi1"}},
      {"mul_expand", {"mul", "-q", "3", "1 + xi1", "1 - xi2", "xi3 + 1/2"}},
      {"body", {"body", "-q", "2", "3 + 2*xi1*xi2 - xi1"}},
      {"invert_nilpotent", {"invert", "-q", "1", "xi1"}},
      {"hom_apply", {"hom-apply", "-q", "1", "--target", "2", "--map", "xi1=xi1 + xi2", "3 + 2*xi1"}},
      {"hom_compose", {"hom-compose", "--ranks", "1,2,1", "--map", "xi1=xi1 + xi2", "--map", "xi1=xi1; xi2=xi1"}},
      {"lemma1", {"lemma1", "-q", "2", "--gens", "xi1; xi2"}},
      {"lemma1_cubic_json", {"lemma1", "--json", "-q", "3", "--gens", "xi1*xi2*xi3"}},
      {"lemma1_even_only", {"lemma1", "-q", "2", "--gens", "xi1*xi2"}},
      {"jfamily", {"jfamily", "-q", "2", "--gens", "xi1; xi2", "--lambda", "5/2", "2 + 3*xi1 - xi2"}},
      {"point_eval", {"point-eval", "--dims", "1,1", "-q", "2", "--point", "x1=1 + xi1*xi2; th1=xi1", "x1^2*th1 + 3"}},
      {"point_map", {"point-map", "--dims", "1,1", "-q", "2", "--target", "1", "--point", "x1=2 + xi1*xi2; th1=3*xi1",
                     "--map", "xi1=xi1; xi2=0"}},
      {"eact", {"eact", "--dims", "0,1", "--map", "xi1=xi1*xi2*xi3", "--point", "th1=5*xi1"}},
      {"class_eq", {"class-eq", "--dims", "1,1", "--point", "x1=1; th1=xi1", "--point", "x1=1 + 0*xi4; th1=xi1"}},
      {"derham_d", {"derham-d", "--dims", "1,2", "x1^2*xi1*xi2"}},
      {"derham_antider", {"derham-antider", "--dims", "0,1", "dxi1^2"}},
      {"derham_antider_bad_form", {"derham-antider", "--dims", "0,1", "x1*dx1"}},
      {"derham_cohomology", {"derham-cohomology", "--dims", "1,1", "--max-degree", "3", "--max-weight", "4"}},
      {"parse_check_json", {"parse-check", "--json", "--kind", "element", "-q", "3", "2*xi3*xi1 - 1/2"}},
      {"unknown_verb", {"frobnicate", "-q", "2"}},
  };
  return cases;
}

inline std::string shell_quote(const std::string& s) {
  bool plain = !s.empty();
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ',' || c == '/' || c == '_' || c == '.'))
      plain = false;
  if (plain) return s;
  return "'" + s + "'";
}

// Full transcript of one invocation, as stored under golden/.
inline std::string render(const GoldenCase& c) {
  std::vector<std::string> args{"vss"};
  args.insert(args.end(), c.args.begin(), c.args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = vss::cli::run(args, out, err);
  std::string cmd = "$ vss";
  for (const std::string& a : c.args) cmd += " " + shell_quote(a);
  return cmd + "\nexit: " + std::to_string(code) + "\n--- stdout\n" + out.str() + "--- stderr\n" + err.str();
}

inline std::string golden_path(const GoldenCase& c) { return std::string(VSS_GOLDEN_DIR) + "/" + c.name + ".txt"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace vss::testing
