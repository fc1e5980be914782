#include "tightframe/cli.hpp"

int main(int argc, char** argv) { return tightframe::cli_main(argc, argv); }
