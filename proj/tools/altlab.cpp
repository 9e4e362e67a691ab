#include <iostream>
#include <string>
#include <vector>

#include "altlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto res = altlab::run_cli(args, altlab::Parallelism::from_env());
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return altlab::kExitViolation;
  }
}
