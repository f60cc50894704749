#include "cli.hpp"

int main(int argc, char** argv) { return latzeta::cli::run(argc, argv); }
