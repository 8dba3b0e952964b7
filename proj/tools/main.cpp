#include "cohbound/cli.hpp"

int main(int argc, char** argv) { return cohbound::cli::run_main(argc, argv); }
