#include "isorep/cli.hpp"

int main(int argc, char** argv) { return isorep::cli::main_cli(argc, argv); }
