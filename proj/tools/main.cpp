#include "cli.hpp"

int main(int argc, char** argv) { return prmlcc::cli::dispatch(argc, argv); }
