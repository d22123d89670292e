#include "cli.hpp"

int main(int argc, char** argv) { return ncrat::cli::main_entry(argc, argv); }
