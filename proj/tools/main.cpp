#include "cli_app.hpp"

int main(int argc, char** argv) { return binform::cli::run(argc, argv); }
