#include "qybe/cli.hpp"

int main(int argc, char** argv) { return qybe::cli::run(argc, argv); }
