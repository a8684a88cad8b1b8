#include <iostream>
#include <string>
#include <vector>

#include <sciprofile/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sciprofile::cli::run(args, std::cout, std::cerr);
}
