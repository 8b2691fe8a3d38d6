#include "cli.hpp"

int main(int argc, char** argv) { return spanlab::cli::run(argc, argv); }
