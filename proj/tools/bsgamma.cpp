#include "bsgamma/cli.hpp"

int main(int argc, char** argv) { return bsgamma::cli::run(argc, argv); }
