// main.cpp
// Entry point for the cpsm command-line tool.

#include "sierpinski/cli.hpp"

int main(int argc, char** argv) { return sierpinski::cli::run(argc, argv); }
