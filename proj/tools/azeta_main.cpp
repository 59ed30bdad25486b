#include "azeta/cli.hpp"

int main(int argc, char** argv) { return azeta::cli::run(argc, argv); }
