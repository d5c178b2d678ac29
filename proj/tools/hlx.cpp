#include "hlx/cli.hpp"

int main(int argc, char** argv) { return hlx::cli_main(argc, argv); }
