#include <filesystem>
#include <iostream>
#include <sstream>

#include "criteria.hpp"
#include "surgeon/cli.hpp"

int main(int argc, char** argv) {
  surgeon::acceptance::Options opt;
  opt.scratch = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::temp_directory_path() / "surgeon-acceptance";
  opt.cli = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = surgeon::cli::run(args, o, e);
    out = o.str();
    return code;
  };
  int failed = 0;
  for (const auto& r : surgeon::acceptance::run_all(opt)) {
    std::cout << surgeon::acceptance::format_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (11 - failed) << "/11 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
