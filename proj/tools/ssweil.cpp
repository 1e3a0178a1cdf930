/* ssweil: command-line front end.  All logic lives in the library's cli_run
 * so tests can drive the same code paths in-process. */
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "ssw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return ssw::cli_run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ssw::kExitInternal;
  } catch (...) {
    std::cerr << "internal error\n";
    return ssw::kExitInternal;
  }
}
