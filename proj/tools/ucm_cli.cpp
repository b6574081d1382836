#include "ucm/cli.hpp"

int main(int argc, char** argv) { return ucm::cli::dispatch(argc, argv, std::cout, std::cerr); }
