#include "altknot/cli.hpp"

int main(int argc, char** argv) { return altknot::cli::run(argc, argv); }
