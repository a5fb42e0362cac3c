#include "qortho/cli.hpp"

int main(int argc, char** argv) { return qortho::cli::run_cli(argc, argv); }
