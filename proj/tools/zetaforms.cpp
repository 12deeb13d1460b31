#include <iostream>

#include "zetaforms/cli.hpp"
#include "zetaforms/errors.hpp"

int main(int argc, char** argv) {
  using namespace zetaforms;
  cli::RunConfig config;
  try {
    config = cli::parse_args(argc, argv);
  } catch (const cli::ParseExit& e) {
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const cli::Report report = cli::run(config);
    std::cout << cli::render(report, config.format);
    return cli::exit_status(report);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
