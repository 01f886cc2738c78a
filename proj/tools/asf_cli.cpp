#include "asf/cli_core.hpp"

int main(int argc, char** argv) { return asf::run_cli(argc, argv); }
