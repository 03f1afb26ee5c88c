#include "commands.hpp"

int main(int argc, char** argv) { return cascade_kit::cli::run(argc, argv); }
