#include "motus/cli.hpp"

int main(int argc, char** argv) { return motus::cli::run_cli(argc, argv); }
