#include "lgmk/cli.hpp"

int main(int argc, char** argv) { return lgmk::run_cli(argc, argv); }
