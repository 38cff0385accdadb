#include "twaff/cli.hpp"

int main(int argc, char** argv) { return twaff::cli::run(argc, argv); }
