#include "wkdim_cli.hpp"

int main(int argc, char** argv) { return wkdim::cli::run(argc, argv); }
