#include <diskschwarz/cli.hpp>

int main(int argc, char** argv) {
  diskschwarz::RunConfig cfg;
  if (auto status = diskschwarz::parse_command_line(argc, argv, cfg)) return *status;
  return diskschwarz::run(cfg);
}
