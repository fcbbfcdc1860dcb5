#include "utccs_cli.hpp"

int main(int argc, char** argv) { return utccs::cli::run(argc, argv); }
