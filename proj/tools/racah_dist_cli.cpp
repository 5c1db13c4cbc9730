#include "racah/cli.hpp"

int main(int argc, char** argv) { return racah::cli::run(argc, argv); }
