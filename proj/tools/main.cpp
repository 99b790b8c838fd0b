#include "gtable/cli.hpp"

int main(int argc, char** argv) { return gtable::cli::run(argc, argv); }
